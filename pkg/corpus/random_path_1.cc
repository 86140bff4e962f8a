CONSCHECK 1
PROBLEM path
N 5
K 2
T 3
S 1 5
0 2
0 3
0 4
1 3
1 4
S 0 9
0 1
0 2
0 3
0 4
1 2
1 3
1 4
2 3
3 4
S 1 7
0 2
0 3
0 4
1 2
1 4
2 4
3 4
