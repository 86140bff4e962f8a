CONSCHECK 1
PROBLEM two-coloring
N 8
T 2
S 0 22
0 1
0 2
0 3
0 5
1 2
1 3
1 5
1 6
2 3
2 4
2 5
2 6
3 4
3 5
3 6
3 7
4 5
4 6
4 7
5 6
5 7
6 7
S 0 8
0 3
1 4
1 5
1 7
3 5
3 6
4 6
5 7
