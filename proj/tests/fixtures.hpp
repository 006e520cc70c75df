// Fixed samples shared across test suites. Reference statistics quoted in the
// tests were computed on exactly these numbers with independent
// implementations and frozen here.
#pragma once

#include <vector>

namespace fixtures {

// AR(1) path, coefficient 0.7, innovations N(0,1).
inline const std::vector<double> y100 = {
    0.30471707975443135, -0.82668215041239357, 0.1717736905177818, 1.0608062997536611,
    -1.2084707788262736, -2.1481090520407093, -1.3758359332612111, -1.2793277456264298,
    -0.91233057944278961, -1.4916753331835326, -0.16477475836564415, 0.6624496045729974,
    0.52974542076231423, 1.4980630015016527, 1.5161534433032025, 0.2020149474290035,
    0.51016124728280121, -0.6017697277310381, 0.45721149189554589, 0.27012213334062923,
    0.0042231297931799028, -0.67797335354871546, 0.74795999118992951, 0.36904251176414848,
    -0.16999806392820327, -0.4711321952379719, 0.2025166488867684, 0.50720571858481622,
    0.76777661460535973, 0.96826463323163448, 2.8194328441326055, 1.567187974508208,
    0.58478885308420814, -0.40442053108893206, 0.33288505081324321, 1.361991828290162,
    0.83944682214823829, -0.25254370145876126, -1.0012618067123724, -0.0502904768739596,
    0.70805083739167052, 1.0387898544793643, 0.061643190846860652, 0.27531155665952223,
    0.30940389880239377, 0.43527132589068857, 1.1761187060716718, 1.0468786430248525,
    1.4117286131892914, 1.0557890987213954, 1.0281717677949609, 1.351008463295013,
    -0.51144989554915743, -0.6776861432417115, -0.94475295456199349, -1.3002049164367373,
    -1.1852856927323998, 0.66524132632171606, -0.40016218726804204, 0.68816482350385133,
    -1.2011543951631087, -1.175693106599951, -0.66023210951496014, 0.12405985469880609,
    0.79806847808201919, 1.3519951698573385, 0.5976715466516993, -0.043981710008377695,
    0.82718868425128944, 0.38772775409428772, -1.0042768954719206, -1.836281040833825,
    -2.2048490145852888, -1.0462335661559381, -0.58993776023859135, 0.27752892190075429,
    -0.23298240100600626, -0.0045479896274901455, 0.62240680122809366, 0.12633822113942716,
    0.5452119923550105, -0.28027754641814395, -0.55924812905777255, -0.77321158433876991,
    -1.7370877546261787, -0.72898894745274334, -0.97969460341964421, -0.6732921036660634,
    0.0094421863396645933, 0.45314070646770932, 0.9825836035001827, 0.58932303794070418,
    -0.010772185485660835, -0.08725874074636164, -1.748415552480483, -2.6710033591594255,
    -3.1924019637660002, -3.2319282022376816, -1.8625755148429406, -2.2092819157501191};

// White-noise sample used for residual-style diagnostics.
inline const std::vector<double> r60 = {
    -0.3781625540393897, 1.2992282977860654, -0.35626397106142593, 0.73751556846708655,
    -0.93361768000987699, -0.20543755786763002, -0.95002205491058123, -0.33903307590056248,
    0.84030813745739552, -1.7273204231923487, 0.43442364354585733, 0.23773560233227789,
    -0.59414995569679441, -1.4460578543884546, 0.072129507713869515, -0.52949270906380241,
    0.23267621135470395, 0.021852145523442879, 1.6017788913209154, -0.23935562747302427,
    -1.023497492621865, 0.17927563495631615, 0.21999668397176517, 1.3591875752404365,
    0.83511124591457853, 0.35687105914950934, 1.4633028912195618, -1.1887630543228509,
    -0.63975153274974772, -0.92657594140552491, -0.38980980315576796, -1.3766861475563088,
    0.63515094681440432, -0.22222269709877338, -1.4708062945026579, -1.0155790812075416,
    0.31351384745019528, 0.83812656789438111, 1.9967308916917865, 2.9138624660073296,
    0.41440943327599639, -0.98953812003186414, -2.1320462807313092, 0.2677114623438358,
    -0.81294109531032599, -0.41535726017968533, -0.61209679905980807, -0.14079088641638526,
    1.0659802307876436, 0.15704856744534462, -0.1586348370386883, -1.0356537528258116,
    -1.674682944704357, -0.48630790907333088, -0.053782550818320493, 1.7679299135798829,
    0.13027452147288585, 0.98273951102305757, -0.49929559853915206, -1.1849437664170246};

// Exponential draws: markedly non-normal.
inline const std::vector<double> s30 = {
    0.28796883974593268, 0.44335829318821152, 0.74985105071207703, 1.8997553816655635,
    0.35832040036107482, 0.76506485422519588, 0.35418522043705447, 0.30431851335186622,
    2.1335421945681414, 0.5565830377633566, 1.3394252684601282, 0.30270257777278547,
    0.1860350940111288, 1.1424078211889555, 1.4174534661483917, 0.95088644485233598,
    1.1873516130319894, 1.0188524253713249, 1.0919559509921228, 2.2546826014947734,
    2.8234690497434518, 0.66235734056229589, 0.090744937502195436, 1.4037343050979292,
    0.84619358608139827, 2.440466587112093, 1.0444733859758097, 0.14026962492330494,
    1.0492073828040775, 0.57244470943731784};

inline const std::vector<double> s7 = {3.1, 4.2, 2.9, 5.0, 3.3, 4.8, 3.9};

inline const std::vector<double> s12 = {0.12, -1.31, 0.57, 2.01, -0.45, 0.98,
                                        -0.12, 1.44, -2.07, 0.33, 0.61, -0.88};

// Plain noise; target of the fixed-parameter likelihood cross-checks.
inline const std::vector<double> x50 = {
    -1.757728, -1.4670449999999999, 2.1292469999999999, -1.287423, -1.096786,
    1.8369139999999999, 2.9050669999999998, -1.171567, -0.36824899999999999,
    0.34155600000000003, 1.7286980000000001, -0.98685699999999998, -0.245278,
    0.77733799999999997, 0.43476599999999999, -0.37615599999999999, -0.133823,
    -1.3748959999999999, -0.238174, -0.26638699999999998, 0.23216999999999999,
    -0.55532700000000002, 0.47153899999999999, 1.0127159999999999, 0.15542900000000001,
    0.35175600000000001, 0.053155000000000001, 8.3999999999999995e-05,
    -0.72155800000000003, 0.316494, -0.097286999999999998, 2.0931679999999999,
    1.5733550000000001, 0.385847, -0.76305699999999999, -1.112411, 1.1911430000000001,
    0.26274900000000001, 0.48014299999999999, -1.744586, 0.92743799999999998,
    0.45441999999999999, -1.1104309999999999, -0.47152500000000003, 0.26371699999999998,
    0.052467, -0.29217100000000001, -0.103488, -0.25197700000000001, 0.152563};

}  // namespace fixtures
