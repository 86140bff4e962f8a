CONSCHECK 1
PROBLEM two-coloring
N 3
T 2
S 1 2
0 1
1 2
S 0 2
0 1
1 2
