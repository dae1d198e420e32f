#pragma once

#include <sierp/covering.hpp>

#include <string>
#include <vector>

namespace sierp {

struct UnknownAssetError : Error {
    explicit UnknownAssetError(const std::string& name) : Error("unknown asset: " + name) {}
};

// Built-in coverings, transcribed with class order preserved. Entries are
// (r, m) or (r, m, p) with p the prime tied to the class.
namespace assets {

inline Covering sierpinski_1960() {
    return Covering{{
        {1, 2, Int(3)}, {2, 4, Int(5)}, {4, 8, Int(17)}, {8, 16, Int(257)},
        {16, 32, Int(65537)}, {32, 64, Int(641)}, {0, 64, Int(6700417)},
    }};
}

inline Covering covering_a() {
    return Covering{{
        {0, 2}, {0, 3}, {1, 4}, {1, 6}, {11, 12},
    }};
}

inline Covering covering_b() {
    return Covering{{
        {0, 3}, {0, 4}, {1, 5}, {5, 6}, {6, 8},
        {3, 10}, {10, 12}, {4, 15}, {11, 20}, {2, 24},
        {7, 30}, {35, 40}, {25, 60}, {55, 120},
    }};
}

inline Covering standard_540() {
    return Covering{{
        {0, 2}, {1, 4}, {5, 6}, {7, 10}, {3, 12},
        {7, 18}, {1, 30}, {19, 36}, {55, 60}, {31, 108},
        {139, 180}, {13, 270}, {103, 540},
    }};
}

inline Covering rational_360() {
    return Covering{{
        {1, 2}, {0, 4}, {0, 6}, {0, 10}, {10, 12},
        {8, 18}, {2, 30}, {2, 36}, {14, 40}, {38, 60},
        {50, 72}, {86, 180},
    }};
}

inline Covering nonreal_360() {
    return Covering{{
        {0, 2}, {3, 4}, {1, 6}, {3, 10}, {9, 12},
        {11, 18}, {17, 30}, {5, 36}, {1, 40}, {5, 60},
        {53, 72}, {89, 180},
    }};
}

inline Covering capture_360() {
    return Covering{{
        {0, 2}, {1, 4}, {1, 6}, {5, 10}, {11, 12},
        {15, 18}, {9, 30}, {3, 36}, {23, 40}, {51, 60},
        {27, 72}, {27, 180},
    }};
}

inline Covering covering_c() {
    return Covering{{
        {0, 3, Int(2)}, {0, 8, Int(3)},
        {1, 10, Int(11)}, {6, 14, Int(29)},
        {6, 16, Int(7)}, {5, 18, Int(19)},
        {3, 20, Int(5)}, {2, 28, Int(13)},
        {19, 30, Int(31)}, {12, 32, Int(47)},
        {29, 36, Int(17)}, {27, 40, Int(41)},
        {22, 42, Int(211)}, {20, 48, Int(23)},
        {5, 50, Int(101)}, {45, 50, Int(151)},
        {35, 54, Int(5779)}, {18, 56, Int(281)},
        {37, 60, Int(61)}, {0, 70, Int(71)},
        {12, 70, Int(911)}, {47, 72, Int(107)},
        {14, 80, Int(2161)}, {10, 84, Int(421)},
        {89, 90, Int(181)}, {85, 90, Int(541)},
        {92, 96, Int(1103)}, {13, 100, Int(3001)},
        {53, 108, Int(53)}, {17, 108, Int(109)},
        {42, 112, Int(14503)}, {7, 120, Int(2521)},
        {40, 126, Int(1009)}, {124, 126, Int(31249)},
        {42, 140, Int(141961)}, {100, 144, Int(103681)},
        {85, 150, Int(12301)}, {115, 150, Int(18451)},
        {78, 160, Int(1601)}, {46, 160, Int(3041)},
        {50, 162, Int(3079)}, {140, 162, Int(62650261)},
        {122, 168, Int(83)}, {50, 168, Int(1427)},
        {73, 180, Int(109441)}, {75, 200, Int(401)},
        {175, 200, Int(570601)}, {110, 210, Int(21211)},
        {196, 210, Int(767131)}, {4, 216, Int(11128427)},
        {158, 224, Int("10745088481")}, {193, 240, Int(241)},
        {133, 240, Int(20641)}, {82, 252, Int(35239681)},
        {29, 270, Int(271)}, {17, 270, Int(811)},
        {119, 270, Int(42391)}, {209, 270, Int(119611)},
        {154, 280, Int("12317523121")}, {28, 288, Int("10749957121")},
        {25, 300, Int(230686501)}, {124, 324, Int(2269)},
        {232, 324, Int(4373)}, {148, 324, Int(19441)},
        {26, 336, Int(167)}, {206, 336, Int(65740583)},
        {98, 350, Int(54601)}, {168, 350, Int(560701)},
        {28, 350, Int(7517651)}, {238, 350, Int(51636551)},
        {133, 360, Int("10783342081")}, {88, 378, Int(379)},
        {130, 378, Int(85429)}, {214, 378, Int(912871)},
        {52, 378, Int(1258740001)}, {393, 400, Int(9125201)},
        {153, 400, Int("5738108801")}, {278, 420, Int("8288823481")},
        {292, 432, Int(6263)}, {196, 432, Int("177962167367")},
        {215, 450, Int(221401)}, {35, 450, Int(15608701)},
        {335, 450, Int("3467131047901")}, {446, 480, Int("23735900452321")},
        {268, 504, Int(1461601)}, {436, 504, Int(764940961)},
        {107, 540, Int("1114769954367361")}, {306, 560, Int("118021448662479038881")},
        {73, 600, Int(601)}, {433, 600, Int("87129547172401")},
        {92, 630, Int(631)}, {476, 630, Int("1051224514831")},
        {260, 630, Int("1983000765501001")}, {340, 648, Int(1828620361)},
        {364, 648, Int("6782976947987")}, {638, 672, Int("115613939510481515041")},
        {658, 700, Int(701)}, {474, 700, Int("17231203730201189308301")},
        {13, 720, Int(8641)}, {515, 720, Int("13373763765986881")},
        {700, 756, Int(38933)}, {472, 756, Int("955921950316735037")},
        {715, 800, Int(124001)}, {315, 800, Int(6996001)},
        {782, 800, Int("3160438834174817356001")}, {742, 810, Int(1621)},
        {94, 810, Int(4861)}, {580, 810, Int(21871)},
        {418, 810, Int(33211)}, {256, 810, Int("31603395781")},
        {34, 810, Int("7654861102843433881")}, {194, 840, Int(721561)},
        {266, 840, Int("140207234004601")}, {508, 864, Int(3023)},
        {412, 864, Int(19009)}, {14, 864, Int(447901921)},
        {686, 864, Int("48265838239823")}, {242, 900, Int("11981661982050957053616001")},
        {46, 1008, Int(503)}, {494, 1008, Int("4322424761927")},
        {830, 1008, Int("571385160581761")}, {302, 1050, Int(1051)},
        {722, 1050, Int("9346455940780547345401")}, {512, 1050, Int("14734291702642871390242051")},
        {590, 1080, Int(12315241)}, {950, 1080, Int("100873547420073756574681")},
        {942, 1120, Int("6135922241")}, {270, 1120, Int("164154312001")},
        {750, 1120, Int("13264519466034652481")}, {428, 1134, Int("89511254659")},
        {680, 1134, Int("1643223059479")}, {806, 1134, Int("68853479653802041437170359")},
        {1058, 1134, Int("5087394106095783259")},
    }};
}

inline Covering table_5() {
    return Covering{{
        {1, 2, Int(3)}, {1, 3, Int(31)}, {0, 4, Int(13)},
        {1, 6, Int(7)}, {2, 8, Int(313)}, {6, 9, Int(19)},
        {0, 12, Int(601)}, {12, 18, Int(5167)}, {14, 24, Int(390001)},
        {18, 36, Int(37)}, {0, 72, Int(73)},
    }};
}

}  // namespace assets

inline const std::vector<std::string>& asset_names() {
    static const std::vector<std::string> names = {
        "sierpinski-1960", "covering-A", "covering-B", "standard-540",   "rational-360",
        "nonreal-360",     "capture-360", "covering-C", "table-5",
    };
    return names;
}

inline Covering builtin_asset(const std::string& name) {
    if (name == "sierpinski-1960") return assets::sierpinski_1960();
    if (name == "covering-A") return assets::covering_a();
    if (name == "covering-B") return assets::covering_b();
    if (name == "standard-540") return assets::standard_540();
    if (name == "rational-360") return assets::rational_360();
    if (name == "nonreal-360") return assets::nonreal_360();
    if (name == "capture-360") return assets::capture_360();
    if (name == "covering-C") return assets::covering_c();
    if (name == "table-5") return assets::table_5();
    throw UnknownAssetError(name);
}

}  // namespace sierp
