CONSCHECK 1
PROBLEM independent-set-deg
N 8
K 3
D 2
T 3
S 0 6
0 4
0 6
1 3
1 5
3 6
4 5
S 0 1
3 7
S 1 0
