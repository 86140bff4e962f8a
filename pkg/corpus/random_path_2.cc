CONSCHECK 1
PROBLEM path
N 7
K 1
T 4
S 0 13
0 1
0 3
0 4
0 6
1 3
1 4
1 5
2 3
2 6
3 4
3 5
3 6
4 6
S 0 19
0 1
0 2
0 3
0 4
0 5
1 2
1 3
1 4
1 5
1 6
2 3
2 4
2 5
2 6
3 4
3 5
3 6
4 5
5 6
S 1 8
0 1
0 2
0 5
0 6
1 4
2 6
3 5
4 5
S 1 18
0 1
0 3
0 4
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
4 5
4 6
5 6
