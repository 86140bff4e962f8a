CONSCHECK 1
PROBLEM two-coloring
N 6
T 2
S 0 13
0 1
0 2
0 3
0 5
1 3
1 4
1 5
2 3
2 4
2 5
3 4
3 5
4 5
S 1 10
0 2
0 3
0 5
1 2
1 3
1 5
2 3
2 4
3 4
3 5
