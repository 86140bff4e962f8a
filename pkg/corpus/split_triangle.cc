CONSCHECK 1
PROBLEM split-graph
N 3
T 2
S 1 1
0 1
S 0 3
0 1
0 2
1 2
