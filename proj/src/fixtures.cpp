#include "ricci/fixtures.hpp"

namespace ricci {

namespace {

constexpr const char* k_karate_edges = R"ricci(0 1
0 2
0 3
0 4
0 5
0 6
0 7
0 8
0 10
0 11
0 12
0 13
0 17
0 19
0 21
0 31
1 2
1 3
1 7
1 13
1 17
1 19
1 21
1 30
2 3
2 7
2 8
2 9
2 13
2 27
2 28
2 32
3 7
3 12
3 13
4 6
4 10
5 6
5 10
5 16
6 16
8 30
8 32
8 33
9 33
13 33
14 32
14 33
15 32
15 33
18 32
18 33
19 33
20 32
20 33
22 32
22 33
23 25
23 27
23 29
23 32
23 33
24 25
24 27
24 31
25 31
26 29
26 33
27 33
28 31
28 33
29 32
29 33
30 32
30 33
31 32
31 33
32 33
)ricci";

constexpr const char* k_karate_labels = R"ricci(0 0
1 0
2 0
3 0
4 0
5 0
6 0
7 0
8 0
9 1
10 0
11 0
12 0
13 0
14 1
15 1
16 0
17 0
18 1
19 0
20 1
21 0
22 1
23 1
24 1
25 1
26 1
27 1
28 1
29 1
30 1
31 1
32 1
33 1
)ricci";

constexpr const char* k_football_edges = R"ricci(0 1
0 4
0 9
0 16
0 23
0 33
0 35
0 41
0 65
0 90
0 93
0 104
1 25
1 27
1 33
1 37
1 45
1 57
1 89
1 101
1 103
1 105
1 109
2 3
2 6
2 13
2 14
2 15
2 47
2 60
2 64
2 72
2 74
2 100
2 106
3 5
3 11
3 26
3 40
3 52
3 58
3 72
3 74
3 81
3 84
3 102
4 5
4 9
4 16
4 23
4 28
4 41
4 69
4 93
4 104
4 108
5 10
5 11
5 52
5 74
5 81
5 84
5 90
5 97
5 98
5 107
6 7
6 32
6 39
6 47
6 55
6 58
6 60
6 64
6 85
6 100
6 106
7 8
7 21
7 22
7 40
7 68
7 73
7 77
7 78
7 82
7 108
7 111
8 9
8 21
8 22
8 41
8 51
8 68
8 77
8 78
8 90
8 111
9 16
9 22
9 23
9 41
9 64
9 93
9 104
9 108
10 11
10 60
10 72
10 74
10 81
10 84
10 98
10 102
10 107
11 24
11 28
11 50
11 69
11 90
11 97
11 104
12 13
12 14
12 17
12 18
12 26
12 34
12 36
12 38
12 43
12 85
13 15
13 32
13 39
13 45
13 60
13 64
13 100
13 106
13 110
14 15
14 26
14 38
14 43
14 54
14 71
14 85
14 99
15 32
15 39
15 47
15 60
15 68
15 92
15 100
15 106
15 114
16 17
16 23
16 38
16 41
16 67
16 81
16 93
16 104
17 20
17 27
17 58
17 62
17 65
17 87
17 95
17 96
17 113
18 19
18 31
18 34
18 36
18 38
18 42
18 54
18 61
18 71
18 99
19 29
19 30
19 33
19 35
19 36
19 44
19 55
19 79
19 94
19 101
20 21
20 36
20 62
20 65
20 70
20 75
20 76
20 87
20 96
20 113
21 22
21 32
21 46
21 51
21 68
21 77
21 108
21 111
22 23
22 47
22 51
22 68
22 77
22 78
22 108
23 41
23 78
23 90
23 93
23 104
23 111
24 25
24 28
24 50
24 66
24 69
24 84
24 87
24 90
24 110
25 33
25 37
25 45
25 53
25 89
25 103
25 105
25 106
25 109
26 27
26 34
26 38
26 42
26 43
26 61
26 85
27 56
27 62
27 63
27 65
27 70
27 76
27 95
27 96
28 38
28 50
28 69
28 78
28 90
28 113
29 30
29 35
29 42
29 55
29 79
29 80
29 82
29 91
29 94
29 101
30 35
30 44
30 50
30 55
30 79
30 82
30 94
30 101
30 109
31 32
31 34
31 43
31 54
31 55
31 61
31 71
31 79
31 85
31 99
32 39
32 47
32 49
32 64
32 100
32 106
33 37
33 45
33 89
33 103
33 105
33 109
34 35
34 42
34 54
34 61
34 71
34 94
34 99
35 44
35 55
35 79
35 92
35 94
35 101
36 37
36 43
36 58
36 59
37 45
37 80
37 89
37 95
37 103
37 105
37 109
38 39
38 43
38 54
38 71
38 85
39 47
39 54
39 60
39 82
39 100
39 106
40 41
40 51
40 52
40 72
40 74
40 81
40 98
40 102
40 107
41 67
41 93
41 104
42 43
42 57
42 63
43 61
43 70
43 79
43 85
44 45
44 48
44 57
44 66
44 75
44 86
44 91
44 112
45 62
45 89
45 103
45 105
45 109
46 47
46 49
46 53
46 67
46 73
46 83
46 88
46 110
46 111
46 114
47 60
47 61
47 64
47 100
48 49
48 53
48 57
48 66
48 75
48 86
48 91
48 92
48 96
48 98
49 53
49 67
49 73
49 83
49 84
49 88
49 110
49 114
50 51
50 68
50 69
50 78
50 90
51 68
51 77
51 78
51 101
51 108
51 111
52 53
52 72
52 74
52 84
52 98
52 102
52 112
53 67
53 73
53 83
53 86
53 88
53 110
53 114
54 55
54 61
54 71
54 99
55 79
55 89
55 94
55 101
56 57
56 62
56 65
56 70
56 76
56 87
56 95
56 96
56 106
57 75
57 86
57 91
57 92
57 112
58 59
58 63
58 88
58 97
58 101
58 114
59 60
59 63
59 66
59 76
59 97
59 113
60 64
60 71
60 106
61 62
61 71
61 92
61 99
62 70
62 76
62 87
62 95
62 105
63 64
63 65
63 97
63 109
63 112
64 100
64 106
64 111
65 66
65 70
65 87
65 96
65 113
66 75
66 76
66 86
66 91
66 92
66 112
67 68
67 73
67 83
67 88
67 104
67 110
67 114
68 78
68 108
68 111
69 70
69 83
69 88
69 90
69 91
69 95
70 76
70 95
70 103
70 113
71 72
71 99
72 74
72 81
72 102
72 104
72 107
73 74
73 77
73 83
73 88
73 110
73 114
74 82
74 84
74 102
75 76
75 86
75 92
75 107
75 112
76 95
76 96
76 113
77 78
77 82
77 98
77 108
77 111
78 108
78 111
79 80
79 94
79 101
79 109
80 82
80 85
80 86
80 91
80 93
80 94
80 105
80 110
81 82
81 83
81 84
81 98
81 107
82 93
82 94
82 100
83 84
83 88
83 110
83 114
84 98
84 107
85 99
86 87
86 91
86 92
86 97
87 95
87 96
87 104
87 113
88 89
88 107
88 110
88 114
89 99
89 103
89 105
89 109
91 92
91 93
91 112
92 106
92 112
93 104
94 101
95 113
96 112
96 113
97 98
97 112
98 102
98 107
99 100
100 102
102 103
102 107
103 105
103 109
104 114
105 109
108 111
110 114
)ricci";

constexpr const char* k_football_labels = R"ricci(0 7
1 0
2 2
3 3
4 7
5 3
6 2
7 8
8 8
9 7
10 3
11 10
12 6
13 2
14 6
15 2
16 7
17 9
18 6
19 1
20 9
21 8
22 8
23 7
24 10
25 0
26 6
27 9
28 11
29 1
30 1
31 6
32 2
33 0
34 6
35 1
36 5
37 0
38 6
39 2
40 3
41 7
42 5
43 6
44 4
45 0
46 11
47 2
48 4
49 11
50 10
51 8
52 3
53 11
54 6
55 1
56 9
57 4
58 11
59 10
60 2
61 6
62 9
63 10
64 2
65 9
66 4
67 11
68 8
69 10
70 9
71 6
72 3
73 11
74 3
75 4
76 9
77 8
78 8
79 1
80 5
81 3
82 5
83 11
84 3
85 6
86 4
87 9
88 11
89 0
90 5
91 4
92 4
93 7
94 1
95 9
96 9
97 10
98 3
99 6
100 2
101 1
102 3
103 0
104 7
105 0
106 2
107 3
108 8
109 0
110 4
111 8
112 4
113 9
114 11
)ricci";

constexpr const char* k_two_triangles_edges = R"ricci(0 1
1 2
0 2
3 4
4 5
3 5
)ricci";

constexpr const char* k_two_triangles_labels = R"ricci(0 0
1 0
2 0
3 1
4 1
5 1
)ricci";

constexpr const char* k_single_edge_edges = R"ricci(a b
)ricci";

}  // namespace

std::span<const Fixture> fixtures() noexcept {
  static const Fixture table[] = {
      {"karate", k_karate_edges, k_karate_labels},
      {"football", k_football_edges, k_football_labels},
      {"two_triangles", k_two_triangles_edges, k_two_triangles_labels},
      {"single_edge", k_single_edge_edges, nullptr},
  };
  return table;
}

const Fixture* find_fixture(std::string_view name) noexcept {
  for (const Fixture& f : fixtures()) {
    if (name == f.name) return &f;
  }
  return nullptr;
}

}  // namespace ricci
