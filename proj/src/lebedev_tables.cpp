// Lebedev-Laikov orbit generators for the octahedrally invariant sphere
// rules. Each row is (orbit type, a, b, per-point weight); the weights of a
// rule sum to one over all points. Orbit types follow the usual convention:
//   1: (±1, 0, 0)                    6 points
//   2: (0, ±1/√2, ±1/√2)            12 points
//   3: (±1/√3, ±1/√3, ±1/√3)         8 points
//   4: (±a, ±a, ±b), b = √(1-2a²)   24 points
//   5: (±a, ±b, 0),  b = √(1-a²)    24 points
//   6: (±a, ±b, ±c), c = √(1-a²-b²) 48 points

#include "lebedev_tables.hpp"

#include <stdexcept>

namespace mcxc::detail {
namespace {

constexpr LebedevOrbit kOrder3[] = {
    {1, 0.0, 0.0, 0.1666666666666667},
};

constexpr LebedevOrbit kOrder5[] = {
    {1, 0.0, 0.0, 0.06666666666666667},
    {3, 0.0, 0.0, 0.075},
};

constexpr LebedevOrbit kOrder7[] = {
    {1, 0.0, 0.0, 0.04761904761904762},
    {2, 0.0, 0.0, 0.0380952380952381},
    {3, 0.0, 0.0, 0.03214285714285714},
};

constexpr LebedevOrbit kOrder9[] = {
    {1, 0.0, 0.0, 0.009523809523809525},
    {3, 0.0, 0.0, 0.03214285714285714},
    {5, 0.4597008433809831, 0.0, 0.02857142857142857},
};

constexpr LebedevOrbit kOrder11[] = {
    {1, 0.0, 0.0, 0.0126984126984127},
    {2, 0.0, 0.0, 0.02257495590828924},
    {3, 0.0, 0.0, 0.02109375},
    {4, 0.3015113445777636, 0.0, 0.02017333553791887},
};

constexpr LebedevOrbit kOrder17[] = {
    {1, 0.0, 0.0, 0.003828270494937162},
    {3, 0.0, 0.0, 0.009793737512487513},
    {4, 0.1851156353447362, 0.0, 0.008211737283191111},
    {4, 0.6904210483822922, 0.0, 0.009942814891178103},
    {4, 0.3956894730559419, 0.0, 0.009595471336070962},
    {5, 0.4783690288121502, 0.0, 0.009694996361663029},
};

constexpr LebedevOrbit kOrder23[] = {
    {1, 0.0, 0.0, 0.001782340447244611},
    {2, 0.0, 0.0, 0.005716905949977102},
    {3, 0.0, 0.0, 0.005573383178848738},
    {4, 0.6712973442695226, 0.0, 0.005608704082587997},
    {4, 0.2892465627575439, 0.0, 0.005158237711805383},
    {4, 0.4446933178717437, 0.0, 0.005518771467273614},
    {4, 0.1299335447650067, 0.0, 0.004106777028169394},
    {5, 0.3457702197611283, 0.0, 0.005051846064614808},
    {6, 0.159041710538353, 0.8360360154824589, 0.005530248916233094},
};

constexpr LebedevOrbit kOrder29[] = {
    {1, 0.0, 0.0, 0.0008545911725128148},
    {3, 0.0, 0.0, 0.003599119285025571},
    {4, 0.3515640345570105, 0.0, 0.003449788424305883},
    {4, 0.6566329410219612, 0.0, 0.003604822601419882},
    {4, 0.4729054132581005, 0.0, 0.003576729661743367},
    {4, 0.09618308522614784, 0.0, 0.002352101413689164},
    {4, 0.2219645236294178, 0.0, 0.003108953122413675},
    {4, 0.7011766416089545, 0.0, 0.003650045807677255},
    {5, 0.2644152887060663, 0.0, 0.002982344963171804},
    {5, 0.5718955891878961, 0.0, 0.00360082093221646},
    {6, 0.2510034751770465, 0.8000727494073951, 0.003571540554273387},
    {6, 0.1233548532583327, 0.4127724083168531, 0.00339231220500617},
};

constexpr LebedevOrbit kOrder35[] = {
    {1, 0.0, 0.0, 0.0005265897968224436},
    {2, 0.0, 0.0, 0.002548219972002607},
    {3, 0.0, 0.0, 0.002512317418927307},
    {4, 0.6909346307509111, 0.0, 0.002530403801186355},
    {4, 0.1774836054609158, 0.0, 0.002014279020918528},
    {4, 0.4914342637784746, 0.0, 0.002501725168402936},
    {4, 0.6456664707424256, 0.0, 0.002513267174597564},
    {4, 0.2861289010307638, 0.0, 0.002302694782227416},
    {4, 0.07568084367178018, 0.0, 0.001462495621594614},
    {4, 0.3927259763368002, 0.0, 0.00244537343731298},
    {5, 0.8818132877794288, 0.0, 0.002417442375638981},
    {5, 0.9776428111182649, 0.0, 0.001910951282179532},
    {6, 0.2054823696403044, 0.8689460322872412, 0.002416930044324775},
    {6, 0.5905157048925271, 0.7999278543857286, 0.002512236854563495},
    {6, 0.5550152361076807, 0.7717462626915901, 0.002496644054553086},
    {6, 0.9371809858553722, 0.3344363145343455, 0.002236607760437849},
};

constexpr LebedevOrbit kOrder41[] = {
    {1, 0.0, 0.0, 0.0003095121295306187},
    {3, 0.0, 0.0, 0.001852379698597489},
    {4, 0.7040954938227469, 0.0, 0.001871790639277744},
    {4, 0.6807744066455244, 0.0, 0.001858812585438317},
    {4, 0.6372546939258752, 0.0, 0.001852028828296213},
    {4, 0.5044419707800358, 0.0, 0.001846715956151242},
    {4, 0.4215761784010967, 0.0, 0.001818471778162769},
    {4, 0.3317920736472123, 0.0, 0.001749564657281154},
    {4, 0.2384736701421887, 0.0, 0.001617210647254411},
    {4, 0.1459036449157763, 0.0, 0.001384737234851692},
    {4, 0.06095034115507196, 0.0, 0.000976433116505105},
    {5, 0.6116843442009876, 0.0, 0.001857161196774078},
    {5, 0.3964755348199858, 0.0, 0.001705153996395864},
    {5, 0.1724782009907724, 0.0, 0.001300321685886048},
    {6, 0.561026380862206, 0.3518280927733519, 0.001842866472905286},
    {6, 0.474239284255198, 0.263471665593795, 0.001802658934377451},
    {6, 0.598412649788538, 0.1816640840360209, 0.00184983056044366},
    {6, 0.3791035407695563, 0.1720795225656878, 0.001713904507106709},
    {6, 0.2778673190586244, 0.08213021581932511, 0.001555213603396808},
    {6, 0.5033564271075117, 0.08999205842074876, 0.001802239128008525},
};

constexpr LebedevOrbit kOrder47[] = {
    {1, 0.0, 0.0, 0.0002192942088181184},
    {2, 0.0, 0.0, 0.00143643361731908},
    {3, 0.0, 0.0, 0.001421940344335877},
    {4, 0.0508720441050236, 0.0, 0.0006798123511050502},
    {4, 0.1228198790178831, 0.0, 0.0009913184235294911},
    {4, 0.2026890814408786, 0.0, 0.001180207833238949},
    {4, 0.2847745156464294, 0.0, 0.001296599602080921},
    {4, 0.3656719078978026, 0.0, 0.001365871427428316},
    {4, 0.4428264886713469, 0.0, 0.001402988604775325},
    {4, 0.5140619627249735, 0.0, 0.001418645563595609},
    {4, 0.6306401219166803, 0.0, 0.001421376741851662},
    {4, 0.6716883332022612, 0.0, 0.001423996475490962},
    {4, 0.6979792685336881, 0.0, 0.001431554042178567},
    {5, 0.1446865674195309, 0.0, 0.0009254401499865368},
    {5, 0.3390263475411216, 0.0, 0.001250239995053509},
    {5, 0.5335804651263506, 0.0, 0.00139436584332923},
    {6, 0.06944024393349413, 0.2355187894242326, 0.001127089094671749},
    {6, 0.226900410952946, 0.410218247404573, 0.00134575376091067},
    {6, 0.08025574607775339, 0.6214302417481605, 0.001424957283316783},
    {6, 0.1467999527896572, 0.3245284345717394, 0.00126152334123775},
    {6, 0.1571507769824727, 0.522448218969663, 0.001392547106052696},
    {6, 0.2365702993157246, 0.6017546634089558, 0.001418761677877656},
    {6, 0.07714815866765733, 0.4346575516141163, 0.001338366684479554},
    {6, 0.306293666621073, 0.4908826589037616, 0.001393700862676131},
    {6, 0.3822477379524787, 0.56487681490995, 0.001415914757466932},
};

constexpr LebedevOrbit kOrder53[] = {
    {1, 0.0, 0.0, 0.0001438294190527431},
    {3, 0.0, 0.0, 0.001125772288287004},
    {4, 0.04292963545341347, 0.0, 0.0004948029341949241},
    {4, 0.1051426854086404, 0.0, 0.000735799010912547},
    {4, 0.1750024867623087, 0.0, 0.0008889132771304384},
    {4, 0.2477653379650257, 0.0, 0.0009888347838921435},
    {4, 0.3206567123955957, 0.0, 0.001053299681709471},
    {4, 0.3916520749849983, 0.0, 0.001092778807014578},
    {4, 0.4590825874187624, 0.0, 0.001114389394063227},
    {4, 0.5214563888415861, 0.0, 0.001123724788051555},
    {4, 0.6253170244654199, 0.0, 0.001125239325243814},
    {4, 0.663792674452317, 0.0, 0.001126153271815905},
    {4, 0.6910410398498301, 0.0, 0.001130286931123841},
    {4, 0.705290700745776, 0.0, 0.001134986534363955},
    {5, 0.123668676265799, 0.0, 0.0006823367927109931},
    {5, 0.2940777114468387, 0.0, 0.0009454158160447096},
    {5, 0.4697753849207649, 0.0, 0.001074429975385679},
    {5, 0.6334563241139567, 0.0, 0.001129300086569132},
    {6, 0.05974048614181342, 0.2029128752777523, 0.0008436884500901954},
    {6, 0.1375760408473636, 0.4602621942484054, 0.001075255720448885},
    {6, 0.3391016526336286, 0.5030673999662036, 0.001108577236864462},
    {6, 0.127167519143982, 0.2817606422442134, 0.0009566475323783357},
    {6, 0.2693120740413512, 0.4331561291720157, 0.001080663250717391},
    {6, 0.1419786452601918, 0.6256167358580814, 0.001126797131196295},
    {6, 0.06709284600738255, 0.3798395216859157, 0.001022568715358061},
    {6, 0.07057738183256172, 0.551750542142352, 0.001108960267713108},
    {6, 0.2783888477882155, 0.6029619156159187, 0.001122790653435766},
    {6, 0.1979578938917407, 0.3589606329589096, 0.00103240184711746},
    {6, 0.2087307061103274, 0.5348666438135476, 0.001107249382283854},
    {6, 0.4055122137872836, 0.5674997546074373, 0.001121780048519972},
};

constexpr LebedevOrbit kOrder59[] = {
    {1, 0.0, 0.0, 0.0001105189233267572},
    {2, 0.0, 0.0, 0.0009205232738090741},
    {3, 0.0, 0.0, 0.0009133159786443561},
    {4, 0.03712636449657089, 0.0, 0.0003690421898017899},
    {4, 0.09140060412262223, 0.0, 0.000560399092868066},
    {4, 0.1531077852469906, 0.0, 0.0006865297629282609},
    {4, 0.2180928891660612, 0.0, 0.000772033855114563},
    {4, 0.2839874532200175, 0.0, 0.0008301545958894795},
    {4, 0.3491177600963764, 0.0, 0.0008686692550179628},
    {4, 0.4121431461444309, 0.0, 0.000892707628584689},
    {4, 0.4718993627149127, 0.0, 0.0009060820238568219},
    {4, 0.5273145452842337, 0.0, 0.0009119777254940867},
    {4, 0.6209475332444019, 0.0, 0.0009128720138604181},
    {4, 0.6569722711857291, 0.0, 0.0009130714935691735},
    {4, 0.6841788309070143, 0.0, 0.0009152873784554116},
    {4, 0.7012604330123631, 0.0, 0.0009187436274321654},
    {5, 0.1072382215478166, 0.0, 0.0005176977312965694},
    {5, 0.2582068959496968, 0.0, 0.0007331143682101417},
    {5, 0.4172752955306717, 0.0, 0.0008463232836379928},
    {5, 0.5700366911792503, 0.0, 0.0009031122694253992},
    {6, 0.9827986018263947, 0.1771774022615325, 0.0006485778453163257},
    {6, 0.9624249230326228, 0.2475716463426288, 0.0007435030910982369},
    {6, 0.9402007994128811, 0.3354616289066489, 0.0007998527891839054},
    {6, 0.9320822040143202, 0.3173615246611977, 0.0008101731497468018},
    {6, 0.9043674199393299, 0.4090268427085357, 0.000848338957459433},
    {6, 0.8912407560074747, 0.3854291150669224, 0.0008556299257311812},
    {6, 0.8676435628462708, 0.4932221184851285, 0.000880320867973826},
    {6, 0.8581979986041619, 0.4785320675922435, 0.000881104818242572},
    {6, 0.8396753624049856, 0.4507422593157064, 0.0008850282341265444},
    {6, 0.8165288564022188, 0.56321230207621, 0.0009021342299040653},
    {6, 0.8015469370783529, 0.54343035696939, 0.0009010091677105086},
    {6, 0.777356306907035, 0.5123518486419871, 0.0009022692938426915},
    {6, 0.7661621213900394, 0.6394279634749102, 0.0009158016174693465},
    {6, 0.755358414353351, 0.6269805509024392, 0.0009131578003189435},
    {6, 0.7344305757559503, 0.603116169309631, 0.0009107813579482705},
    {6, 0.7043837184021765, 0.5693702498468441, 0.0009105760258970126},
};

}  // namespace

std::span<const LebedevOrbit> lebedev_orbits(int order) {
  switch (order) {
    case 3: return kOrder3;
    case 5: return kOrder5;
    case 7: return kOrder7;
    case 9: return kOrder9;
    case 11: return kOrder11;
    case 17: return kOrder17;
    case 23: return kOrder23;
    case 29: return kOrder29;
    case 35: return kOrder35;
    case 41: return kOrder41;
    case 47: return kOrder47;
    case 53: return kOrder53;
    case 59: return kOrder59;
    default: break;
  }
  throw std::out_of_range("no Lebedev table for this order");
}

}  // namespace mcxc::detail
