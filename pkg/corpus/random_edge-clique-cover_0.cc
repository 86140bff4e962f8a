CONSCHECK 1
PROBLEM edge-clique-cover
N 4
K 2
T 3
S 0 2
0 1
1 3
S 0 3
0 1
0 2
1 2
S 1 1
1 3
