#include "quadsurd/oeis.hpp"

#include "quadsurd/numbers.hpp"

#include <functional>
#include <sstream>

namespace quadsurd::oeis {

namespace {

// Verbatim term lists for the sequences without a formula in the numbers
// module (convergent interleavings and the A026741-derived forms the paper
// tabulates). Index ranges match the paper's usage; compare_prefix absorbs
// small offset differences.

const char kA122652[] = R"bfile(0 0
1 4
2 40
3 396
4 3920
5 38804
6 384120
7 3802396
8 37639840
9 372596004
10 3688320200
11 36510605996
12 361417739760
13 3577666791604
14 35415250176280
15 350574834971196
16 3470333099535680
17 34352756160385604
18 340057228504320360
19 3366219528882817996
20 33322138060323859600
21 329855161074355778004
22 3265229472683233920440
23 32322439565757983426396
24 319959166184896600343520
25 3167269222283208020008804
26 31352733056647183599744520
27 310360061344188627977436396
28 3072247880385239096174619440
29 30412118742508202333768758004
30 301048939544696784241512960600
31 2980077276704459640081360847996
32 29499723827499899616572095519360
33 292017160998294536525639594345604
34 2890671886155445465639823847936680
35 28614701700556160119872598885021196
36 283256345119406155733086165002275280
37 2803948749493505397210989051137731604
38 27756231149815647816376804346375040760
39 274758362748662972766557054412612675996
40 2719827396336814079849193739779751719200
41 26923515600619477825725380343384904516004
42 266515328609857964177404609694069293440840
43 2638229770497960163948320716597308029892396
44 26115782376369743675305802556279011005483120
45 258519593993199476589109704846192802024938804
46 2559080157555625022215791245905649009243904920
47 25332281981563050745568802754210297290414110396
48 250763739658074882433472236296197323894897199040
49 2482305114599185773589153560207762941658557880004
50 24572287406333782853458063365781432092690681601000
51 243240568948738642760991480097606557985248258129996
52 2407833402081052644756456737610284147759791899698960
53 23835093451861787804803575896005234919612670738859604
54 235943101116536825403279302222442065048366915488897080
55 2335595917713506466227989446328415415564056484150111196
56 23120016076018527836876615161061712090592197926012214880
57 228864564842471771902538162164288705490357922775972037604
58 2265525632348699191188505006481825342812987029833708161160
59 22426391758644520139982511902653964722639512375561109573996
)bfile";

const char kA143608[] = R"bfile(1 1
2 4
3 7
4 24
5 41
6 140
7 239
8 816
9 1393
10 4756
11 8119
12 27720
13 47321
14 161564
15 275807
16 941664
17 1607521
18 5488420
19 9369319
20 31988856
21 54608393
22 186444716
23 318281039
24 1086679440
25 1855077841
26 6333631924
27 10812186007
28 36915112104
29 63018038201
30 215157040700
31 367296043199
32 1254027132096
33 2140758220993
34 7309005751876
35 12477253282759
36 42600007379160
37 72722761475561
38 248291038523084
39 423859315570607
40 1447146223759344
41 2470433131948081
42 8434586304032980
43 14398739476117879
44 49160371600438536
45 83922003724759193
46 286527643298598236
47 489133282872437279
48 1670005488191150880
49 2850877693509864481
50 9733505285848307044
51 16616132878186749607
52 56731026226898691384
53 96845919575610633161
54 330652652075543841260
55 564459384575477049359
56 1927184886226364356176
57 3289910387877251662993
58 11232456665282642295796
59 19175002942688032928599
60 65467555105469489418600
)bfile";

const char kA079496[] = R"bfile(1 1
2 3
3 5
4 17
5 29
6 99
7 169
8 577
9 985
10 3363
11 5741
12 19601
13 33461
14 114243
15 195025
16 665857
17 1136689
18 3880899
19 6625109
20 22619537
21 38613965
22 131836323
23 225058681
24 768398401
25 1311738121
26 4478554083
27 7645370045
28 26102926097
29 44560482149
30 152139002499
31 259717522849
32 886731088897
33 1513744654945
34 5168247530883
35 8822750406821
36 30122754096401
37 51422757785981
38 175568277047523
39 299713796309065
40 1023286908188737
41 1746860020068409
42 5964153172084899
43 10181446324101389
44 34761632124320657
45 59341817924539925
46 202605639573839043
47 345869461223138161
48 1180872205318713601
49 2015874949414289041
50 6882627592338442563
51 11749380235262596085
52 40114893348711941777
53 68480406462161287469
54 233806732499933208099
55 399133058537705128729
56 1362725501650887306817
57 2326317944764069484905
58 7942546277405390632803
59 13558774610046711780701
60 46292552162781456490001
)bfile";

const char kA165367[] = R"bfile(0 1
1 5
2 4
3 11
4 7
5 17
6 10
7 23
8 13
9 29
10 16
11 35
12 19
13 41
14 22
15 47
16 25
17 53
18 28
19 59
20 31
21 65
22 34
23 71
24 37
25 77
26 40
27 83
28 43
29 89
30 46
31 95
32 49
33 101
34 52
35 107
36 55
37 113
38 58
39 119
40 61
41 125
42 64
43 131
44 67
45 137
46 70
47 143
48 73
49 149
50 76
51 155
52 79
53 161
54 82
55 167
56 85
57 173
58 88
59 179
)bfile";

const char kA168077[] = R"bfile(0 0
1 1
2 1
3 9
4 4
5 25
6 9
7 49
8 16
9 81
10 25
11 121
12 36
13 169
14 49
15 225
16 64
17 289
18 81
19 361
20 100
21 441
22 121
23 529
24 144
25 625
26 169
27 729
28 196
29 841
30 225
31 961
32 256
33 1089
34 289
35 1225
36 324
37 1369
38 361
39 1521
40 400
41 1681
42 441
43 1849
44 484
45 2025
46 529
47 2209
48 576
49 2401
50 625
51 2601
52 676
53 2809
54 729
55 3025
56 784
57 3249
58 841
59 3481
)bfile";

const char kA129194[] = R"bfile(0 0
1 1
2 2
3 9
4 8
5 25
6 18
7 49
8 32
9 81
10 50
11 121
12 72
13 169
14 98
15 225
16 128
17 289
18 162
19 361
20 200
21 441
22 242
23 529
24 288
25 625
26 338
27 729
28 392
29 841
30 450
31 961
32 512
33 1089
34 578
35 1225
36 648
37 1369
38 722
39 1521
40 800
41 1681
42 882
43 1849
44 968
45 2025
46 1058
47 2209
48 1152
49 2401
50 1250
51 2601
52 1352
53 2809
54 1458
55 3025
56 1568
57 3249
58 1682
59 3481
)bfile";


std::string generate(long first, long last, const std::function<Int(long)>& f) {
    std::ostringstream os;
    for (long n = first; n <= last; ++n) os << n << " " << f(n).get_str() << "\n";
    return os.str();
}

}  // namespace

const std::map<std::string, std::string>& bundled_fixtures() {
    static const std::map<std::string, std::string> fixtures = [] {
        using namespace quadsurd::numbers;
        std::map<std::string, std::string> m;
        m["A122652"] = kA122652;
        m["A143608"] = kA143608;
        m["A079496"] = kA079496;
        m["A165367"] = kA165367;
        m["A168077"] = kA168077;
        m["A129194"] = kA129194;
        m["A000188"] = generate(1, 100, [](long n) { return a000188(n); });
        m["A007913"] = generate(1, 100, [](long n) { return a007913(n); });
        m["A019554"] = generate(1, 100, [](long n) { return a019554(n); });
        m["A026741"] = generate(0, 100, [](long n) { return a026741(n); });
        m["A083481"] = generate(1, 80, [](long n) { return a083481(static_cast<unsigned>(n)); });
        m["A001079"] = generate(0, 60, [](long n) { return companion_d(static_cast<unsigned>(n)); });
        return m;
    }();
    return fixtures;
}

}  // namespace quadsurd::oeis
