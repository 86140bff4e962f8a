CONSCHECK 1
PROBLEM edge-clique-cover
N 5
K 2
T 1
S 0 10
0 1
0 2
0 3
0 4
1 2
1 3
1 4
2 3
2 4
3 4
