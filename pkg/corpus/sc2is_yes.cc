CONSCHECK 1
PROBLEM independent-set-deg
N 6
K 4
D 1
T 3
S 0 1
0 1
S 0 2
0 1
4 5
S 0 1
2 3
