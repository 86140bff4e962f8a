CONSCHECK 1
PROBLEM independent-set-deg
N 4
K 2
D 1
T 2
S 1 1
0 1
S 0 1
2 3
