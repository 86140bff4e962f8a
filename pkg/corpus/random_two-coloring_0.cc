CONSCHECK 1
PROBLEM two-coloring
N 4
T 2
S 0 6
0 1
0 2
0 3
1 2
1 3
2 3
S 0 5
0 1
0 2
1 2
1 3
2 3
