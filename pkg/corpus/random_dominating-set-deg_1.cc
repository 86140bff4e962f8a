CONSCHECK 1
PROBLEM dominating-set-deg
N 3
K 2
D 1
T 4
S 0 0
S 1 1
1 2
S 1 1
0 1
S 0 1
0 2
