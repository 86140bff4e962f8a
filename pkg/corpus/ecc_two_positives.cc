CONSCHECK 1
PROBLEM edge-clique-cover
N 3
K 1
T 2
S 1 1
0 1
S 1 1
1 2
