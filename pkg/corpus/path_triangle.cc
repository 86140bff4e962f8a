CONSCHECK 1
PROBLEM path
N 3
K 2
T 2
S 1 3
0 1
0 2
1 2
S 0 2
0 1
1 2
