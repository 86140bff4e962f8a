CONSCHECK 1
PROBLEM edge-clique-cover
N 3
K 1
T 3
S 1 1
0 1
S 0 3
0 1
0 2
1 2
S 1 1
0 1
