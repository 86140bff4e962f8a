CONSCHECK 1
PROBLEM matching
N 2
K 1
T 1
S 1 1
0 1
