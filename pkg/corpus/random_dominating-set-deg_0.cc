CONSCHECK 1
PROBLEM dominating-set-deg
N 6
K 1
D 2
T 2
S 0 5
0 2
0 3
1 2
1 5
3 4
S 0 6
0 3
0 5
1 2
1 4
2 3
4 5
