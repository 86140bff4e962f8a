CONSCHECK 1
PROBLEM independent-set-deg
N 2
K 1
D 1
T 2
S 1 1
0 1
S 1 0
