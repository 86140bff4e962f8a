CONSCHECK 1
PROBLEM independent-set-deg
N 4
K 3
D 2
T 4
S 1 1
1 2
S 1 0
S 0 2
1 3
2 3
S 0 3
0 1
0 3
1 3
