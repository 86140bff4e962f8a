CONSCHECK 1
PROBLEM matching
N 8
K 2
T 4
S 1 6
0 1
0 2
0 3
4 5
4 6
4 7
S 0 26
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
4 6
4 7
5 6
5 7
6 7
S 0 24
0 2
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
4 6
5 6
5 7
6 7
S 0 26
0 1
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
4 7
5 6
5 7
6 7
