CONSCHECK 1
PROBLEM matching
N 3
K 1
T 3
S 1 2
0 1
0 2
S 0 2
0 2
1 2
S 0 2
0 1
1 2
