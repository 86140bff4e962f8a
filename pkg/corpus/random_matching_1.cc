CONSCHECK 1
PROBLEM matching
N 7
K 2
T 2
S 1 2
1 2
4 5
S 1 21
0 1
0 2
0 3
0 4
0 5
0 6
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
4 6
5 6
