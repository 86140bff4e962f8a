CONSCHECK 1
PROBLEM path
N 4
K 2
T 5
S 1 4
0 1
0 2
1 3
2 3
S 0 3
0 2
0 3
2 3
S 0 3
0 1
0 3
1 3
S 0 3
1 2
1 3
2 3
S 0 3
0 1
0 2
1 2
