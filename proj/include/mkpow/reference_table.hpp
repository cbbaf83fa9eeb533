#pragma once
namespace mkpow {
// 150-row reference table for m(k) and its factorization m = k*a*b.
// Rows whose value differs from the 1976 formula are flagged bold.
struct ReferenceRow {
    long k;
    const char* a;
    const char* a_factored;
    const char* b;
    const char* b_factored;
    const char* m_over_k;
    const char* m;
    bool bold;
};

inline constexpr ReferenceRow kReferenceTable[] = {
    {1, "1", "1", "1", "1", "1", "1", false},
    {2, "1", "1", "1", "1", "1", "2", false},
    {3, "1", "1", "2", "2", "2", "6", false},
    {4, "2", "2", "3", "3", "6", "24", false},
    {5, "1", "1", "2", "2", "2", "10", false},
    {6, "12", "4·3=12", "5", "5", "60", "360", false},
    {7, "1", "1", "2", "2", "2", "14", false},
    {8, "2", "2", "21", "3·7=21", "42", "336", false},
    {9, "3", "3", "2", "2", "6", "54", false},
    {10, "10", "2·5=10", "3", "3", "30", "300", false},
    {11, "1", "1", "1", "1", "1", "11", false},
    {12, "12", "4·3=12", "55", "5·11=55", "660", "7920", false},
    {13, "1", "1", "3", "3", "3", "39", false},
    {14, "14", "2·7=14", "13", "13", "182", "2548", true},
    {15, "15", "3·5=15", "2", "2", "30", "450", false},
    {16, "2", "2", "21", "3·7=21", "42", "672", false},
    {17, "1", "1", "2", "2", "2", "34", false},
    {18, "12", "4·3=12", "85", "5·17=85", "1020", "18360", false},
    {19, "1", "1", "1", "1", "1", "19", false},
    {20, "10", "2·5=10", "57", "3·19=57", "570", "11400", false},
    {21, "21", "3·7=21", "2", "2", "42", "882", false},
    {22, "22", "2·11=22", "1", "1", "22", "484", false},
    {23, "1", "1", "1", "1", "1", "23", false},
    {24, "12", "4·3=12", "8855", "5·7·11·23=8855", "106260", "2550240", false},
    {25, "5", "5", "2", "2", "10", "250", false},
    {26, "26", "2·13=26", "15", "3·5=15", "390", "10140", false},
    {27, "3", "3", "2", "2", "6", "162", false},
    {28, "14", "2·7=14", "39", "3·13=39", "546", "15288", true},
    {29, "1", "1", "1", "1", "1", "29", false},
    {30, "60", "4·3·5=60", "29", "29", "1740", "52200", false},
    {31, "1", "1", "10", "2·5=10", "10", "310", false},
    {32, "2", "2", "651", "3·7·31=651", "1302", "41664", false},
    {33, "33", "3·11=33", "2", "2", "66", "2178", false},
    {34, "34", "2·17=34", "1", "1", "34", "1156", false},
    {35, "35", "5·7=35", "2", "2", "70", "2450", false},
    {36, "12", "4·3=12", "935", "5·11·17=935", "11220", "403920", false},
    {37, "1", "1", "1", "1", "1", "37", false},
    {38, "38", "2·19=38", "37", "37", "1406", "53428", false},
    {39, "39", "3·13=39", "2", "2", "78", "3042", false},
    {40, "10", "2·5=10", "399", "3·7·19=399", "3990", "159600", false},
    {41, "1", "1", "1", "1", "1", "41", false},
    {42, "84", "4·3·7=84", "2665", "5·13·41=2665", "223860", "9402120", false},
    {43, "1", "1", "1", "1", "1", "43", false},
    {44, "22", "2·11=22", "129", "3·43=129", "2838", "124872", false},
    {45, "15", "3·5=15", "2", "2", "30", "1350", false},
    {46, "46", "2·23=46", "1", "1", "46", "2116", false},
    {47, "1", "1", "1", "1", "1", "47", false},
    {48, "12", "4·3=12", "416185", "5·7·11·23·47=416185", "4994220", "239722560", false},
    {49, "7", "7", "2", "2", "14", "686", false},
    {50, "10", "2·5=10", "21", "3·7=21", "210", "10500", false},
    {51, "51", "3·17=51", "2", "2", "102", "5202", false},
    {52, "26", "2·13=26", "15", "3·5=15", "390", "20280", false},
    {53, "1", "1", "1", "1", "1", "53", false},
    {54, "12", "4·3=12", "4505", "5·17·53=4505", "54060", "2919240", false},
    {55, "55", "5·11=55", "2", "2", "110", "6050", false},
    {56, "14", "2·7=14", "39", "3·13=39", "546", "30576", true},
    {57, "57", "3·19=57", "14", "2·7=14", "798", "45486", false},
    {58, "58", "2·29=58", "1", "1", "58", "3364", false},
    {59, "1", "1", "1", "1", "1", "59", false},
    {60, "60", "4·3·5=60", "357599", "11·19·29·59=357599", "21455940", "1287356400", false},
    {61, "1", "1", "1", "1", "1", "61", false},
    {62, "62", "2·31=62", "305", "5·61=305", "18910", "1172420", true},
    {63, "21", "3·7=21", "2", "2", "42", "2646", false},
    {64, "2", "2", "651", "3·7·31=651", "1302", "83328", false},
    {65, "65", "5·13=65", "6", "2·3=6", "390", "25350", false},
    {66, "132", "4·3·11=132", "5", "5", "660", "43560", false},
    {67, "1", "1", "1", "1", "1", "67", false},
    {68, "34", "2·17=34", "201", "3·67=201", "6834", "464712", false},
    {69, "69", "3·23=69", "2", "2", "138", "9522", false},
    {70, "70", "2·5·7=70", "39", "3·13=39", "2730", "191100", true},
    {71, "1", "1", "1", "1", "1", "71", false},
    {72, "12", "4·3=12", "10687985", "5·7·11·17·23·71=10687985", "128255820", "9234419040", false},
    {73, "1", "1", "2", "2", "2", "146", false},
    {74, "74", "2·37=74", "73", "73", "5402", "399748", false},
    {75, "15", "3·5=15", "2", "2", "30", "2250", false},
    {76, "38", "2·19=38", "111", "3·37=111", "4218", "320568", false},
    {77, "77", "7·11=77", "2", "2", "154", "11858", false},
    {78, "156", "4·3·13=156", "5", "5", "780", "60840", false},
    {79, "1", "1", "1", "1", "1", "79", false},
    {80, "10", "2·5=10", "31521", "3·7·19·79=31521", "315210", "25216800", false},
    {81, "3", "3", "2", "2", "6", "486", false},
    {82, "82", "2·41=82", "3", "3", "246", "20172", false},
    {83, "1", "1", "1", "1", "1", "83", false},
    {84, "84", "4·3·7=84", "2433145", "5·11·13·41·83=2433145", "204384180", "17168271120", false},
    {85, "85", "5·17=85", "2", "2", "170", "14450", false},
    {86, "86", "2·43=86", "1", "1", "86", "7396", false},
    {87, "87", "3·29=87", "2", "2", "174", "15138", false},
    {88, "22", "2·11=22", "903", "3·7·43=903", "19866", "1748208", false},
    {89, "1", "1", "1", "1", "1", "89", false},
    {90, "60", "4·3·5=60", "43877", "17·29·89=43877", "2632620", "236935800", false},
    {91, "91", "7·13=91", "6", "2·3=6", "546", "49686", false},
    {92, "46", "2·23=46", "3", "3", "138", "12696", false},
    {93, "93", "3·31=93", "10", "2·5=10", "930", "86490", false},
    {94, "94", "2·47=94", "1", "1", "94", "8836", false},
    {95, "95", "5·19=95", "2", "2", "190", "18050", false},
    {96, "12", "4·3=12", "12901735", "5·7·11·23·31·47=12901735", "154820820", "14862798720", false},
    {97, "1", "1", "1", "1", "1", "97", false},
    {98, "14", "2·7=14", "1261", "13·97=1261", "17654", "1730092", true},
    {99, "33", "3·11=33", "2", "2", "66", "6534", false},
    {100, "10", "2·5=10", "399", "3·7·19=399", "3990", "399000", false},
    {101, "1", "1", "1", "1", "1", "101", false},
    {102, "204", "4·3·17=204", "505", "5·101=505", "103020", "10508040", false},
    {103, "1", "1", "1", "1", "1", "103", false},
    {104, "26", "2·13=26", "10815", "3·5·7·103=10815", "281190", "29243760", false},
    {105, "105", "3·5·7=105", "2", "2", "210", "22050", false},
    {106, "106", "2·53=106", "1", "1", "106", "11236", false},
    {107, "1", "1", "1", "1", "1", "107", false},
    {108, "12", "4·3=12", "5302385", "5·11·17·53·107=5302385", "63628620", "6871890960", false},
    {109, "1", "1", "1", "1", "1", "109", false},
    {110, "110", "2·5·11=110", "327", "3·109=327", "35970", "3956700", false},
    {111, "111", "3·37=111", "2", "2", "222", "24642", false},
    {112, "14", "2·7=14", "39", "3·13=39", "546", "61152", true},
    {113, "1", "1", "1", "1", "1", "113", false},
    {114, "228", "4·3·19=228", "146335", "5·7·37·113=146335", "33364380", "3803539320", false},
    {115, "115", "5·23=115", "2", "2", "230", "26450", false},
    {116, "58", "2·29=58", "3", "3", "174", "20184", false},
    {117, "39", "3·13=39", "2", "2", "78", "9126", false},
    {118, "118", "2·59=118", "1", "1", "118", "13924", false},
    {119, "119", "7·17=119", "2", "2", "238", "28322", false},
    {120, "60", "4·3·5=60", "57573439", "7·11·19·23·29·59=57573439", "3454406340", "414528760800", false},
    {121, "11", "11", "3", "3", "33", "3993", false},
    {122, "122", "2·61=122", "11", "11", "1342", "163724", false},
    {123, "123", "3·41=123", "2", "2", "246", "30258", false},
    {124, "62", "2·31=62", "915", "3·5·61=915", "56730", "7034520", true},
    {125, "5", "5", "2", "2", "10", "1250", false},
    {126, "84", "4·3·7=84", "45305", "5·13·17·41=45305", "3805620", "479508120", false},
    {127, "1", "1", "2", "2", "2", "254", false},
    {128, "2", "2", "82677", "3·7·31·127=82677", "165354", "21165312", false},
    {129, "129", "3·43=129", "2", "2", "258", "33282", false},
    {130, "130", "2·5·13=130", "3", "3", "390", "50700", false},
    {131, "1", "1", "1", "1", "1", "131", false},
    {132, "132", "4·3·11=132", "28165", "5·43·131=28165", "3717780", "490746960", false},
    {133, "133", "7·19=133", "22", "2·11=22", "2926", "389158", false},
    {134, "134", "2·67=134", "1", "1", "134", "17956", false},
    {135, "15", "3·5=15", "2", "2", "30", "4050", false},
    {136, "34", "2·17=34", "1407", "3·7·67=1407", "47838", "6505968", false},
    {137, "1", "1", "1", "1", "1", "137", false},
    {138, "276", "4·3·23=276", "685", "5·137=685", "189060", "26090280", false},
    {139, "1", "1", "1", "1", "1", "139", false},
    {140, "70", "2·5·7=70", "102999", "3·13·19·139=102999", "7209930", "1009390200", true},
    {141, "141", "3·47=141", "2", "2", "282", "39762", false},
    {142, "142", "2·71=142", "1", "1", "142", "20164", false},
    {143, "143", "11·13=143", "3", "3", "429", "61347", false},
    {144, "12", "4·3=12", "502335295", "5·7·11·17·23·47·71=502335295", "6028023540", "868035389760", false},
    {145, "145", "5·29=145", "2", "2", "290", "42050", false},
    {146, "146", "2·73=146", "1", "1", "146", "21316", false},
    {147, "21", "3·7=21", "2", "2", "42", "6174", false},
    {148, "74", "2·37=74", "219", "3·73=219", "16206", "2398488", false},
    {149, "1", "1", "1", "1", "1", "149", false},
    {150, "60", "4·3·5=60", "30247", "7·29·149=30247", "1814820", "272223000", false},
};

}  // namespace mkpow
