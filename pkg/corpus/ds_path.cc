CONSCHECK 1
PROBLEM dominating-set-deg
N 3
K 1
D 2
T 2
S 1 2
0 1
1 2
S 0 1
0 1
