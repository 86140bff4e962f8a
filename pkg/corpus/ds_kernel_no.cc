CONSCHECK 1
PROBLEM dominating-set-deg
N 10
K 1
D 2
T 1
S 1 9
0 1
1 2
2 3
3 4
4 5
5 6
6 7
7 8
8 9
