CONSCHECK 1
PROBLEM matching
N 4
K 2
T 1
S 0 1
0 1
