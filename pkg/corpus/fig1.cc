CONSCHECK 1
PROBLEM two-coloring
N 6
T 3
S 1 1
0 1
S 0 4
0 2
0 5
1 3
1 4
S 0 3
0 3
1 2
1 5
