#include "covol/printed_tables.hpp"

namespace covol {
namespace tables {

namespace {

std::vector<PrintedCell> grid(long n_lo, const std::vector<std::vector<const char*>>& rows) {
  std::vector<PrintedCell> out;
  for (size_t i = 0; i < rows.size(); ++i)
    for (size_t j = 0; j < rows[i].size(); ++j)
      out.push_back({n_lo + static_cast<long>(i), static_cast<long>(j) + 1,
                     rows[i][j]});
  return out;
}

std::vector<PrintedCell> single_row(long m_lo, const std::vector<const char*>& vals) {
  std::vector<PrintedCell> out;
  for (size_t i = 0; i < vals.size(); ++i)
    out.push_back({m_lo + static_cast<long>(i), 0, vals[i]});
  return out;
}

}  // namespace

const std::vector<PrintedCell>& a3() {
  static const std::vector<PrintedCell> t = grid(2, {
      {"0.0364756", "0.00337012", "0.000276781", "0.0000215771", "1.63315e-6",
       "1.21281e-7", "8.88761e-9", "6.44933e-10"},
      {"0.0486342", "0.00231876", "0.000177084", "0.0000166585", "1.76356e-6",
       "2.01469e-7", "2.42731e-8", "3.04153e-9"},
      {"0.0182378", "0.000214239", "9.19392e-6", "6.99962e-7", "7.37412e-8",
       "9.57798e-9", "1.43998e-9", "2.41175e-10"},
      {"0.0291805", "0.000860260", "0.000267434", "0.000235765", "0.000375160",
       "0.000873531", "0.00265357", "0.00980934"},
      {"0.0121585", "0.000715847", "0.00162363", "0.0185268", "0.528020",
       "27.1489", "2107.97", "221884"},
      {"0.0208432", "0.0374453", "11.9823", "37981.0", "4.41409e8",
       "1.18530e13", "5.71337e17", "4.24155e22"},
      {"0.00911891", "0.556912", "35451.1", "4.88495e10", "3.84324e17",
       "9.29477e24", "4.92580e32", "4.65827e40"},
      {"0.0162114", "685.655", "2.23863e11", "3.83726e21", "6.20398e32",
       "4.26138e44", "8.04066e56", "3.19899e69"},
      {"0.00729513", "306071", "9.29184e17", "3.98641e32", "2.82701e48",
       "1.22281e65", "1.87055e82", "7.27033e99"},
      {"0.0132639", "1.40574e10", "1.27888e28", "4.91209e48", "5.79785e70",
       "6.22507e93", "3.12510e117", "4.89869e141"},
  });
  return t;
}

const std::vector<PrintedCell>& a5() {
  static const std::vector<PrintedCell> t = grid(2, {
      {"0.418729", "0.0142379", "0.000484124", "0.0000164615", "5.59732e-7",
       "1.90323e-8", "6.47149e-10", "2.20047e-11"},
      {"2.80041e-6", "7.27880e-6", "0.0000189190", "0.0000491740",
       "0.000127813", "0.000332209", "0.000863474", "0.00224433"},
      {"3.99708e-14", "2.79970e-11", "1.96100e-8", "0.0000137356",
       "0.00962086", "6.73878", "4720.08", "3.30611e6"},
      {"1.84711e-23", "2.62212e-16", "3.72231e-9", "0.0528412", "750123",
       "1.06486e13", "1.51165e20", "2.14591e27"},
      {"1.68676e-35", "2.85139e-23", "4.82016e-11", "81.4827", "1.37743e14",
       "2.32849e26", "3.93621e38", "6.65400e50"},
      {"4.80891e-49", "1.09207e-29", "2.48000e-10", "5.63189e9", "1.27896e29",
       "2.90442e48", "6.59571e67", "1.49783e87"},
      {"2.65506e-65", "6.66279e-38", "1.67200e-10", "4.19583e17", "1.05293e45",
       "2.64229e72", "6.63074e99", "1.66396e127"},
      {"4.52005e-83", "1.88536e-45", "7.86407e-8", "3.28019e30", "1.36821e68",
       "5.70695e105", "2.38043e143", "9.92906e180"},
      {"1.47804e-103", "1.08376e-54", "7.94662e-6", "5.82681e43", "4.27247e92",
       "3.13276e141", "2.29707e190", "1.68431e239"},
      {"1.48182e-125", "3.59121e-63", "0.870337", "2.10928e62", "5.11187e124",
       "1.23887e187", "3.00243e249", "7.27644e311"},
  });
  return t;
}

const std::vector<PrintedCell>& a6() {
  static const std::vector<PrintedCell> t = grid(3, {
      {"6.87691", "125.979", "2307.81", "42276.9", "774473", "1.41876e7",
       "2.59904e8", "4.76120e9"},
      {"2.40966", "21.6241", "194.053", "1741.42", "15627.4", "140239",
       "1.25850e6", "1.12937e7"},
      {"1.54762", "8.80582", "50.1044", "285.090", "1622.14", "9229.86",
       "52517.2", "298819"},
      {"1.40247", "6.73460", "32.3393", "155.292", "745.707", "3580.86",
       "17195.1", "82570.5"},
      {"1.23838", "4.82334", "18.7864", "73.1708", "284.992", "1110.01",
       "4323.37", "16839.0"},
      {"1.20619", "4.19700", "14.6037", "50.8142", "176.811", "615.221",
       "2140.69", "7448.64"},
      {"1.13928", "3.44306", "10.4054", "31.4468", "95.0368", "287.215",
       "868.006", "2623.24"},
  });
  return t;
}

const std::vector<PrintedCell>& a7() {
  static const std::vector<PrintedCell> t = single_row(
      1, {"1", "5", "49", "725", "14641", "300125", "20134393", "282300416"});
  return t;
}

const std::vector<PrintedCell>& a8() {
  static const std::vector<PrintedCell> t = single_row(
      2, {"2.603", "5.527", "26.39", "87.71", "563.2", "3616.4", "23222.2",
          "149118", "9.58e5", "6.15e6", "3.95e7", "2.54e8", "1.63e9",
          "1.05e10"});
  return t;
}

const std::vector<PrintedCell>& a9() {
  static const std::vector<PrintedCell> t = single_row(
      2, {"8.05e-8", "454.01", "2.08e10", "8.57e13", "9.13e16", "5.08e19",
          "2.55e22", "1.26e25", "6.23e27", "3.07e30", "1.52e33", "7.48e35",
          "3.69e38", "1.82e41"});
  return t;
}

bool matches_printed(const Interval& enc, std::string_view printed) {
  const Rational v = rational_from_decimal(printed);
  const Rational ulp = printed_ulp(printed);
  Rational diff = enc.mid() - v;
  if (diff < 0) diff = -diff;
  if (diff > ulp) return false;
  return v >= enc.lo() - ulp && v <= enc.hi() + ulp;
}

}  // namespace tables
}  // namespace covol
