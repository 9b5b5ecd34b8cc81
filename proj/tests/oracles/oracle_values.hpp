// Generated by generate_oracles.py (mpmath, 30 digits). Do not edit.
#pragma once

namespace oracle {

struct PointValue {
  double alpha;
  double beta;
  double z;
  double value;
};

inline constexpr PointValue kPdf[] = {
    {1, 1, 0.0, 1.0},
    {1, 1, 0.1, 0.76632980744100824075},
    {1, 1, 1, 0.2734375},
    {1, 1, 2, 0.11522633744855967078},
    {1, 1, 10, 0.0076632980744100824075},
    {0.8, 1.3, 0.0, 0.51133407655146785582},
    {0.8, 1.3, 0.1, 0.43165676155404535023},
    {0.8, 1.3, 1, 0.23891250127487546264},
    {0.8, 1.3, 2, 0.13574552030394859527},
    {0.8, 1.3, 10, 0.012798683788775799834},
    {2, 0.5, 0.0, 6.2222222222222218768},
    {2, 0.5, 0.1, 2.4640148993097168084},
    {2, 0.5, 1, 0.10552888888888888303},
    {2, 0.5, 2, 0.028004362980399829596},
    {2, 0.5, 10, 0.0012946143025261850348},
    {0.3, 5, 0.0, 0.01846153846153846285},
    {0.3, 5, 0.1, 0.01817269247513951758},
    {0.3, 5, 1, 0.016667598100907052216},
    {0.3, 5, 2, 0.016337643355191731843},
    {0.3, 5, 10, 0.016853625957782453121},
};

inline constexpr PointValue kSurvival[] = {
    {1, 1, 0.1, 0.91328212802155838834},
    {1, 1, 1, 0.5},
    {1, 1, 2, 0.32098765432098765432},
    {1, 1, 10, 0.086717871978441611663},
    {1, 1, 50, 0.019341558279164906687},
    {0.8, 1.3, 0.1, 0.95324961478251609233},
    {0.8, 1.3, 1, 0.67068724531429617408},
    {0.8, 1.3, 2, 0.48880462982365827242},
    {0.8, 1.3, 10, 0.15506644196039416257},
    {0.8, 1.3, 50, 0.036713785250883541028},
    {2, 0.5, 0.1, 0.61928561512068384205},
    {2, 0.5, 1, 0.11509333333333333333},
    {2, 0.5, 2, 0.060938090964001648349},
    {2, 0.5, 10, 0.013390976514642204319},
    {2, 0.5, 50, 0.0027560473944024997883},
    {0.3, 5, 0.1, 0.99816854772794567892},
    {0.3, 5, 1, 0.98261669931483462735},
    {0.3, 5, 2, 0.9661874927771625147},
    {0.3, 5, 10, 0.82972599909855775126},
    {0.3, 5, 50, 0.43254206730769233843},
};

// z holds the moment order k.
inline constexpr PointValue kMoment[] = {
    {1, 1, -0.75, 3.2809106853502241957},
    {1, 1, -0.5, 1.5523885573402689245},
    {1, 1, -0.25, 1.1066531537246272372},
    {1, 1, 0.25, 1.1066531537246272372},
    {1, 1, 0.5, 1.5523885573402689245},
    {1, 1, 0.75, 3.2809106853502241957},
    {0.8, 1.3, -0.75, 1.9819465026152731866},
    {0.8, 1.3, -0.5, 1.1103872068574382806},
    {0.8, 1.3, -0.25, 0.93647254355734761811},
    {0.8, 1.3, 0.25, 1.3073653098131826412},
    {0.8, 1.3, 0.5, 2.1671292619679317189},
    {0.8, 1.3, 0.75, 5.4087777652863319271},
    {2, 0.5, -0.75, 13.124739621149545633},
    {2, 0.5, -0.5, 3.9378991248122058893},
    {2, 0.5, -0.25, 1.767486752263788741},
    {2, 0.5, 0.25, 0.687393835282532304},
    {2, 0.5, 0.5, 0.59177569950432733933},
    {2, 0.5, 0.75, 0.75701951882156390484},
    {0.3, 5, -0.75, 0.1750032903320386903},
    {0.3, 5, -0.5, 0.22891664636903465351},
    {0.3, 5, -0.25, 0.43174112615062683816},
    {0.3, 5, 0.25, 2.7767944001878593413},
    {0.3, 5, 0.5, 9.6114160950231048124},
    {0.3, 5, 0.75, 49.17223777750922119},
};

// z holds the probability.
inline constexpr PointValue kQuantile[] = {
    {1, 1, 0.01, 0.010175571562888053183},
    {1, 1, 0.1, 0.1176322832673781291},
    {1, 1, 0.5, 1.0},
    {1, 1, 0.9, 8.5010676680227351497},
    {1, 1, 0.99, 98.274577876997190768},
    {0.8, 1.3, 0.01, 0.019955572354496549259},
    {0.8, 1.3, 0.1, 0.23300969794859941917},
    {0.8, 1.3, 0.5, 1.9193017911203612706},
    {0.8, 1.3, 0.9, 16.743222789621790007},
    {0.8, 1.3, 0.99, 191.01813670092714947},
    {2, 0.5, 0.01, 0.0016264900024732271906},
    {2, 0.5, 0.1, 0.018155283879155978286},
    {2, 0.5, 0.5, 0.1577638657777158669},
    {2, 0.5, 0.9, 1.1656451304591673803},
    {2, 0.5, 0.99, 13.509910486396574862},
    {0.3, 5, 0.01, 0.56315777238108344793},
    {0.3, 5, 0.1, 5.9249165920649834907},
    {0.3, 5, 0.5, 39.000672376272605243},
    {0.3, 5, 0.9, 320.82886826863499498},
    {0.3, 5, 0.99, 3493.8308306378839611},
};

inline constexpr PointValue kShannon[] = {
    {1, 1, 0.0, 1.9732220270865049085},
    {0.8, 1.3, 0.0, 2.6394089522285653602},
    {2, 0.5, 0.0, 0.065795888936393549676},
    {0.3, 5, 0.0, 5.6327330539258971343},
};

// z holds the order.
inline constexpr PointValue kRenyi[] = {
    {1, 1, 0.75, 2.7427512781026700932},
    {1, 1, 2, 1.1167960970887609109},
    {1, 1, 3, 0.84642022028533790501},
    {0.8, 1.3, 0.75, 3.410465706939552587},
    {0.8, 1.3, 2, 1.7788930280482923764},
    {0.8, 1.3, 3, 1.5114354628876510297},
};

inline constexpr double kIncompleteA08B13K025Z2 = 0.45154076302723487463;
inline constexpr double kGofZA08B13K025Z2 = 3.3263769000714519972;
inline constexpr double kIncompleteA1B1K05Z1 = 0.29181927867013446224;

}  // namespace oracle
