CONSCHECK 1
PROBLEM split-graph
N 4
T 1
S 0 4
0 1
0 2
1 2
2 3
