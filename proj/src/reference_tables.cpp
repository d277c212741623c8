#include "sqrac/reference_tables.hpp"

namespace sqrac::reftab {

const std::array<AngleRow, 16> kTable1 = {{
    {0.0, 1.000, 0.00, 0.00},
    {1.0, 0.998, 0.15, 2.00},
    {2.0, 0.990, 0.42, 3.98},
    {3.0, 0.978, 0.94, 5.95},
    {4.0, 0.961, 1.67, 7.90},
    {5.0, 0.940, 2.62, 9.82},
    {6.0, 0.914, 3.78, 11.72},
    {7.0, 0.883, 5.18, 13.63},
    {8.0, 0.848, 6.82, 12.55}, // beta inconsistent with neighbors; see tables report
    {9.0, 0.809, 8.74, 17.50},
    {10.0, 0.766, 10.97, 19.53},
    {11.0, 0.719, 13.58, 21.68},
    {12.0, 0.669, 16.64, 24.04},
    {13.0, 0.616, 20.31, 26.74},
    {14.0, 0.559, 24.89, 30.03},
    {15.0, 0.500, 31.22, 34.63},
}};

const std::array<AngleRow, 7> kTable2 = {{
    {1.0, 0.998, 15.52, 24.32},
    {2.0, 0.990, 17.15, 26.49},
    {3.0, 0.978, 19.26, 28.76},
    {4.0, 0.961, 22.00, 31.21},
    {5.0, 0.940, 25.61, 33.94},
    {6.0, 0.914, 30.80, 37.29},
    {7.0, 0.883, 42.60, 43.76},
}};

const std::array<AngleRow, 7> kTable3 = {{
    {2.0, 0.990, 1.12, 7.94},
    {3.0, 0.978, 2.52, 11.85},
    {4.0, 0.961, 4.53, 15.72},
    {5.0, 0.940, 7.23, 19.60},
    {6.0, 0.914, 10.79, 23.59},
    {7.0, 0.883, 15.57, 27.83},
    {8.0, 0.848, 22.40, 32.70},
}};

const std::array<SharpnessRow, 15> kTable4 = {{
    {0.0, 0.997, 1.000, 0.858, 0.856, 0.677, 0.674},
    {2.0, 0.964, 0.995, 0.842, 0.840, 0.693, 0.696},
    {3.0, 0.953, 0.976, 0.841, 0.833, 0.730, 0.700},
    {4.0, 0.945, 0.968, 0.838, 0.830, 0.715, 0.728},
    {5.0, 0.914, 0.942, 0.836, 0.810, 0.738, 0.734},
    {6.0, 0.905, 0.913, 0.820, 0.820, 0.735, 0.762},
    {7.0, 0.882, 0.888, 0.815, 0.810, 0.761, 0.756},
    {8.0, 0.826, 0.853, 0.791, 0.792, 0.775, 0.762},
    {10.0, 0.757, 0.756, 0.773, 0.762, 0.781, 0.796},
    {12.0, 0.652, 0.672, 0.732, 0.729, 0.794, 0.821},
    {14.0, 0.587, 0.597, 0.710, 0.705, 0.821, 0.816},
    {16.0, 0.411, 0.452, 0.648, 0.643, 0.840, 0.839},
    {18.0, 0.300, 0.348, 0.621, 0.591, 0.826, 0.826},
    {20.0, 0.151, 0.221, 0.554, 0.553, 0.848, 0.850},
    {22.5, 0.015, 0.017, 0.481, 0.507, 0.843, 0.857},
}};

const std::array<EqualSharpnessRow, 7> kTable5 = {{
    {2.0, 0.990, 0.841, 0.695, 0.753, 0.751},
    {3.0, 0.978, 0.837, 0.715, 0.753, 0.750},
    {4.0, 0.961, 0.834, 0.721, 0.757, 0.758},
    {5.0, 0.940, 0.823, 0.736, 0.760, 0.760},
    {6.0, 0.914, 0.820, 0.749, 0.762, 0.761},
    {7.0, 0.883, 0.812, 0.758, 0.770, 0.767},
    {8.0, 0.848, 0.792, 0.769, 0.771, 0.771},
}};

const std::array<JointDecodeRow, 4> kTable6 = {{
    {0.0, 0.799, 0.749, 0.753, 0.748, 0.752, 0.484}, // unbiased p_abc anomalous
    {2.0, 0.791, 0.755, 0.430, 0.765, 0.765, 0.487},
    {4.0, 0.786, 0.761, 0.437, 0.771, 0.773, 0.490},
    {6.0, 0.781, 0.778, 0.442, 0.778, 0.780, 0.494},
}};

const std::array<IncompatibilityRow, 7> kTable7 = {{
    {2.0, 0.990, 0.999, 0.019, 0.962, 0.030},
    {3.0, 0.978, 0.996, 0.040, 0.916, 0.036},
    {4.0, 0.961, 0.987, 0.068, 0.853, 0.072},
    {5.0, 0.940, 0.968, 0.101, 0.775, 0.106},
    {6.0, 0.914, 0.930, 0.137, 0.680, 0.121},
    {7.0, 0.883, 0.856, 0.175, 0.564, 0.218},
    {8.0, 0.848, 0.710, 0.214, 0.416, 0.292},
}};

const std::array<ChshRow, 12> kTable8 = {{
    {0.0, 1.000, 2.855, 1.405, 0.974}, // not reproducible from its own row; excluded
    {2.0, 0.990, 2.727, 1.560, 0.540},
    {4.0, 0.961, 2.675, 1.770, 0.454},
    {6.0, 0.913, 2.560, 1.985, 0.320},
    {8.0, 0.848, 2.332, 2.149, 0.211},
    {10.0, 0.766, 2.141, 2.308, 0.194},
    {12.0, 0.669, 1.844, 2.461, 0.237},
    {14.0, 0.559, 1.660, 2.548, 0.310},
    {16.0, 0.438, 1.164, 2.645, 0.414},
    {18.0, 0.309, 0.851, 2.730, 0.545},
    {20.0, 0.173, 0.427, 2.794, 0.711},
    {22.5, 0.001, 0.047, 2.830, 0.999},
}};

} // namespace sqrac::reftab
