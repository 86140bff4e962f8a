CONSCHECK 1
PROBLEM split-graph
N 5
T 3
S 1 2
0 4
1 3
S 0 0
S 1 9
0 1
0 2
0 3
1 2
1 3
1 4
2 3
2 4
3 4
