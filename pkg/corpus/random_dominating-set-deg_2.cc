CONSCHECK 1
PROBLEM dominating-set-deg
N 6
K 3
D 2
T 2
S 0 3
0 1
0 4
4 5
S 0 6
0 1
0 2
1 4
2 5
3 4
3 5
