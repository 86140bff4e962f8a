CONSCHECK 1
PROBLEM path
N 2
K 1
T 3
S 0 0
S 1 1
0 1
S 0 0
