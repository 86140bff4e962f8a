CONSCHECK 1
PROBLEM path
N 9
K 4
T 6
S 1 12
0 1
0 2
0 3
1 4
2 4
3 4
4 5
4 6
4 7
5 8
6 8
7 8
S 0 21
0 2
0 3
0 4
0 6
0 7
0 8
2 3
2 4
2 6
2 7
2 8
3 4
3 6
3 7
3 8
4 6
4 7
4 8
6 7
6 8
7 8
S 0 10
0 2
0 4
0 6
0 8
2 4
2 6
2 8
4 6
4 8
6 8
S 0 21
0 1
0 3
0 4
0 5
0 7
0 8
1 3
1 4
1 5
1 7
1 8
3 4
3 5
3 7
3 8
4 5
4 7
4 8
5 7
5 8
7 8
S 0 28
1 2
1 3
1 4
1 5
1 6
1 7
1 8
2 3
2 4
2 5
2 6
2 7
2 8
3 4
3 5
3 6
3 7
3 8
4 5
4 6
4 7
4 8
5 6
5 7
5 8
6 7
6 8
7 8
S 0 28
0 1
0 2
0 3
0 4
0 5
0 6
0 7
1 2
1 3
1 4
1 5
1 6
1 7
2 3
2 4
2 5
2 6
2 7
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
