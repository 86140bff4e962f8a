CONSCHECK 1
PROBLEM matching
N 4
K 1
T 2
S 1 2
0 1
2 3
S 0 1
0 1
