#pragma once

// Generated by tests/oracles/ml_table.py (mpmath, 40 digits). Do not edit.

namespace fracopt_test {

struct MlReference {
  double alpha;
  double beta;
  double z;
  double value;
};

inline constexpr MlReference kMlTable[] = {
    {0.1, 1.0, -10000.0, 0.000093569283491411069262},
    {0.1, 1.0, -2000.0, 0.00046767472245757676419},
    {0.1, 1.0, -150.0, 0.0062005767700984177689},
    {0.1, 1.0, -40.0, 0.022869412718031259351},
    {0.1, 1.0, -10.0, 0.085696957010654685096},
    {0.1, 1.0, -3.0, 0.23855934978253855753},
    {0.1, 1.0, -1.2, 0.44008076891061892949},
    {0.1, 1.0, -0.5, 0.65432446028800192845},
    {0.1, 1.0, 0.3, 1.45647374631449454},
    {0.1, 0.1, -10000.0, 9.3560695661783766588e-10},
    {0.1, 0.1, -2000.0, 2.3373009033636494804e-8},
    {0.1, 0.1, -150.0, 4.1085695767117372343e-6},
    {0.1, 0.1, -40.0, 0.00005588971533991792261},
    {0.1, 0.1, -10.0, 0.00078467401305859587984},
    {0.1, 0.1, -3.0, 0.0060745407799221394821},
    {0.1, 0.1, -1.2, 0.020618989929014555172},
    {0.1, 0.1, -0.5, 0.045397940282298668227},
    {0.1, 0.1, 0.3, 0.21975918277524624071},
    {0.1, 1.1, -10000.0, 0.000099990643071650863699},
    {0.1, 1.1, -2000.0, 0.00049976616263877123563},
    {0.1, 1.1, -150.0, 0.0066253294881993441994},
    {0.1, 1.1, -40.0, 0.024428264682049219682},
    {0.1, 1.1, -10.0, 0.09143030429893453577},
    {0.1, 1.1, -3.0, 0.25381355007248715883},
    {0.1, 1.1, -1.2, 0.46659935924115092895},
    {0.1, 1.1, -0.5, 0.69135107942399617027},
    {0.1, 1.1, 0.3, 1.5215791543816485693},
    {0.1, 2.1, -10000.0, 0.000099989603532217750597},
    {0.1, 2.1, -2000.0, 0.00049974019560657307091},
    {0.1, 2.1, -150.0, 0.0066207713373476051286},
    {0.1, 2.1, -40.0, 0.024366510539031959443},
    {0.1, 2.1, -10.0, 0.090576241117154170074},
    {0.1, 2.1, -3.0, 0.24742885475120620588},
    {0.1, 2.1, -1.2, 0.44583464483928847484},
    {0.1, 2.1, -0.5, 0.64750321029061692493},
    {0.1, 2.1, 0.3, 1.3351810554011182405},
    {0.1, 0.5, -10000.0, 0.000045079077409729836683},
    {0.1, 0.5, -2000.0, 0.00022532855863060540273},
    {0.1, 0.5, -150.0, 0.002990702427597990598},
    {0.1, 0.5, -40.0, 0.011065046985116083463},
    {0.1, 0.5, -10.0, 0.041947084375351055663},
    {0.1, 0.5, -3.0, 0.11997819874043370098},
    {0.1, 0.5, -1.2, 0.22886120895415963268},
    {0.1, 0.5, -0.5, 0.35170429656333216147},
    {0.1, 0.5, 0.3, 0.86928590019037373325},
    {0.1, 1.7, -10000.0, 0.00011190621274229035657},
    {0.1, 1.7, -2000.0, 0.00055930552305624336739},
    {0.1, 1.7, -150.0, 0.0074113479323923154963},
    {0.1, 1.7, -40.0, 0.027291322326938852372},
    {0.1, 1.7, -10.0, 0.1016592715206971693},
    {0.1, 1.7, -3.0, 0.27905802740759388413},
    {0.1, 1.7, -1.2, 0.50587054968600956936},
    {0.1, 1.7, -0.5, 0.73911925273832121809},
    {0.1, 1.7, 0.3, 1.5540416263729523384},
    {0.25, 1.0, -10000.0, 0.000081599252289806481335},
    {0.25, 1.0, -2000.0, 0.00040788345663019603427},
    {0.25, 1.0, -150.0, 0.0054153328885503847272},
    {0.25, 1.0, -40.0, 0.020052912682773116829},
    {0.25, 1.0, -10.0, 0.076237035239721635688},
    {0.25, 1.0, -3.0, 0.21900442756040679925},
    {0.25, 1.0, -1.2, 0.41774497061327680858},
    {0.25, 1.0, -0.5, 0.63767051920039335655},
    {0.25, 1.0, 0.3, 1.4728826105784625983},
    {0.25, 1.0, 2.0, 35544441.509930781603},
    {0.25, 0.25, -10000.0, 2.0398402736400580318e-9},
    {0.25, 0.25, -2000.0, 5.0967809773524915406e-8},
    {0.25, 0.25, -150.0, 8.9840353860729236466e-6},
    {0.25, 0.25, -40.0, 0.0001231806612504825664},
    {0.25, 0.25, -10.0, 0.0017784974573088643459},
    {0.25, 0.25, -3.0, 0.014567819940323703349},
    {0.25, 0.25, -1.2, 0.052035325654658155767},
    {0.25, 0.25, -0.5, 0.11802429093084774659},
    {0.25, 0.25, 0.3, 0.55828477289899834278},
    {0.25, 0.25, 2.0, 284355536.74783683914},
    {0.25, 1.25, -10000.0, 0.000099991840074771019352},
    {0.25, 1.25, -2000.0, 0.00049979605827168490198},
    {0.25, 1.25, -150.0, 0.0066305644474096641018},
    {0.25, 1.25, -40.0, 0.024498677182930672079},
    {0.25, 1.25, -10.0, 0.092376296476027836431},
    {0.25, 1.25, -3.0, 0.26033185747986440025},
    {0.25, 1.25, -1.2, 0.48521252448893601081},
    {0.25, 1.25, -0.5, 0.7246589615992132869},
    {0.25, 1.25, 0.3, 1.5762753685948753862},
    {0.25, 1.25, 2.0, 17772220.254965390802},
    {0.25, 2.25, -10000.0, 0.000099989120475747540656},
    {0.25, 2.25, -2000.0, 0.00049972812466544045416},
    {0.25, 2.25, -150.0, 0.0066186403793975892623},
    {0.25, 2.25, -40.0, 0.024337168749726583947},
    {0.25, 2.25, -10.0, 0.090146638010300858551},
    {0.25, 2.25, -3.0, 0.24382246220081986533},
    {0.25, 2.25, -1.2, 0.43267308575137390297},
    {0.25, 2.25, -0.5, 0.61711329269404783014},
    {0.25, 2.25, 0.3, 1.1818635127892374081},
    {0.25, 2.25, 2.0, 1110762.7839177122979},
    {0.25, 0.5, -10000.0, 0.000027581566079036904072},
    {0.25, 0.5, -2000.0, 0.00013790780593119977042},
    {0.25, 0.5, -150.0, 0.0018387111919654882762},
    {0.25, 0.5, -40.0, 0.0068923120542239707948},
    {0.25, 0.5, -10.0, 0.027403716537290045001},
    {0.25, 0.5, -3.0, 0.087082614296628537004},
    {0.25, 0.5, -1.2, 0.18648361431295930573},
    {0.25, 0.5, -0.5, 0.31558274379872313555},
    {0.25, 0.5, 0.3, 0.94156370022929679625},
    {0.25, 0.5, 2.0, 142177768.23601058816},
    {0.25, 1.7, -10000.0, 0.00011289907986458824674},
    {0.25, 1.7, -2000.0, 0.00056427769073168075451},
    {0.25, 1.7, -150.0, 0.0074792115587125270318},
    {0.25, 1.7, -40.0, 0.027561642277700381856},
    {0.25, 1.7, -10.0, 0.10291605376181757631},
    {0.25, 1.7, -3.0, 0.28354333235368896087},
    {0.25, 1.7, -1.2, 0.51427760270104747754},
    {0.25, 1.7, -0.5, 0.74859828065521131747},
    {0.25, 1.7, 0.3, 1.5163220597909686338},
    {0.25, 1.7, 2.0, 5103729.2450134682047},
    {0.5, 1.0, -10000.0, 0.000056418958072680841152},
    {0.5, 1.0, -2000.0, 0.00028209475651204239492},
    {0.5, 1.0, -150.0, 0.00376118031224799193},
    {0.5, 1.0, -40.0, 0.014100335983377813625},
    {0.5, 1.0, -10.0, 0.056140992743822585858},
    {0.5, 1.0, -3.0, 0.17900115118138995042},
    {0.5, 1.0, -1.2, 0.37853741692923973161},
    {0.5, 1.0, -0.5, 0.61569034419292587487},
    {0.5, 1.0, 0.3, 1.4537492328427655512},
    {0.5, 1.0, 2.0, 108.94090438997797241},
    {0.5, 1.0, 10.0, 5.3762342836322708968e+43},
    {0.5, 0.5, -10000.0, 2.8209478754245637265e-9},
    {0.5, 0.5, -2000.0, 7.0523671497099336045e-8},
    {0.5, 0.5, -150.0, 0.000012536710557497449745},
    {0.5, 0.5, -40.0, 0.00017614421264374195843},
    {0.5, 0.5, -10.0, 0.0027796561095304283729},
    {0.5, 0.5, -3.0, 0.02718613000358643569},
    {0.5, 0.5, -1.2, 0.10994468323266862583},
    {0.5, 0.5, -0.5, 0.25634441145129334951},
    {0.5, 0.5, 0.3, 1.0003143534005859362},
    {0.5, 0.5, 2.0, 218.44599836350370111},
    {0.5, 0.5, 10.0, 5.3762342836322708968e+44},
    {0.5, 1.5, -10000.0, 0.000099994358104192731916},
    {0.5, 1.5, -2000.0, 0.0004998589526217439788},
    {0.5, 1.5, -150.0, 0.0066415921312516800538},
    {0.5, 1.5, -40.0, 0.024647491600415554659},
    {0.5, 1.5, -10.0, 0.094385900725617741414},
    {0.5, 1.5, -3.0, 0.27366628293953668319},
    {0.5, 1.5, -1.2, 0.51788548589230024283},
    {0.5, 1.5, -0.5, 0.76861931161414825026},
    {0.5, 1.5, 0.3, 1.5124974428092185601},
    {0.5, 1.5, 2.0, 53.970452194988986206},
    {0.5, 1.5, 10.0, 5.3762342836322708968e+42},
    {0.5, 2.5, -10000.0, 0.000099988717208272625916},
    {0.5, 2.5, -2000.0, 0.00049971803017296427729},
    {0.5, 2.5, -150.0, 0.0066168116633349217381},
    {0.5, 2.5, -40.0, 0.024310167702815564363},
    {0.5, 2.5, -10.0, 0.089660067336301051675},
    {0.5, 2.5, -3.0, 0.23836523509378045659},
    {0.5, 2.5, -1.2, 0.40937938805332476955},
    {0.5, 2.5, -0.5, 0.56096057807454270545},
    {0.5, 2.5, 0.3, 0.93464750793006670631},
    {0.5, 2.5, 2.0, 12.710518256973368408},
    {0.5, 2.5, 10.0, 5.3762342836322708968e+40},
    {0.5, 0.5, -10000.0, 2.8209478754245637265e-9},
    {0.5, 0.5, -2000.0, 7.0523671497099336045e-8},
    {0.5, 0.5, -150.0, 0.000012536710557497449745},
    {0.5, 0.5, -40.0, 0.00017614421264374195843},
    {0.5, 0.5, -10.0, 0.0027796561095304283729},
    {0.5, 0.5, -3.0, 0.02718613000358643569},
    {0.5, 0.5, -1.2, 0.10994468323266862583},
    {0.5, 0.5, -0.5, 0.25634441145129334951},
    {0.5, 0.5, 0.3, 1.0003143534005859362},
    {0.5, 0.5, 2.0, 218.44599836350370111},
    {0.5, 0.5, 10.0, 5.3762342836322708968e+44},
    {0.5, 1.7, -10000.0, 0.00010890473849184295769},
    {0.5, 1.7, -2000.0, 0.00054436964197575126628},
    {0.5, 1.7, -150.0, 0.0072266552160147801191},
    {0.5, 1.7, -40.0, 0.026750113056544508507},
    {0.5, 1.7, -10.0, 0.10144754081036559692},
    {0.5, 1.7, -3.0, 0.28742492438164274544},
    {0.5, 1.7, -1.2, 0.52963431806890511292},
    {0.5, 1.7, -0.5, 0.76879630372269152182},
    {0.5, 1.7, 0.3, 1.4445419695405585294},
    {0.5, 1.7, 2.0, 40.628513092227333081},
    {0.5, 1.7, 10.0, 2.1403174188895520206e+42},
    {0.75, 1.0, -10000.0, 0.000027584387485953953727},
    {0.75, 1.0, -2000.0, 0.00013797838698992864226},
    {0.75, 1.0, -150.0, 0.0018513841784833034538},
    {0.75, 1.0, -40.0, 0.0070756747558264278336},
    {0.75, 1.0, -10.0, 0.030643250976059637773},
    {0.75, 1.0, -3.0, 0.12585513691184152704},
    {0.75, 1.0, -1.2, 0.33759969356588842231},
    {0.75, 1.0, -0.5, 0.60379034509524675559},
    {0.75, 1.0, 0.3, 1.4062253628813921054},
    {0.75, 1.0, 2.0, 16.477360564726636035},
    {0.75, 1.0, 10.0, 3030607625.2902218726},
    {0.75, 0.75, -10000.0, 2.0690406707926679704e-9},
    {0.75, 0.75, -2000.0, 5.1768365415589030856e-8},
    {0.75, 0.75, -150.0, 9.3203639543309896194e-6},
    {0.75, 0.75, -40.0, 0.00013612330377760571833},
    {0.75, 0.75, -10.0, 0.0025434431529668198927},
    {0.75, 0.75, -3.0, 0.037918187563107108741},
    {0.75, 0.75, -1.2, 0.18611621476470500527},
    {0.75, 0.75, -0.5, 0.42184231246858204849},
    {0.75, 0.75, 0.3, 1.2495605344595288539},
    {0.75, 0.75, 2.0, 20.898484277658940826},
    {0.75, 0.75, 10.0, 6529246199.8559822759},
    {0.75, 1.75, -10000.0, 0.000099997241561251404605},
    {0.75, 1.75, -2000.0, 0.00049993101080650503568},
    {0.75, 1.75, -150.0, 0.006654324105476777977},
    {0.75, 1.75, -40.0, 0.024823108131104339304},
    {0.75, 1.75, -10.0, 0.096935674902394036223},
    {0.75, 1.75, -3.0, 0.29138162102938615765},
    {0.75, 1.75, -1.2, 0.5520002553617596685},
    {0.75, 1.75, -0.5, 0.79241930980950648883},
    {0.75, 1.75, 0.3, 1.3540845429379737347},
    {0.75, 1.75, 2.0, 7.7386802823633180177},
    {0.75, 1.75, 10.0, 303060762.42902218726},
    {0.75, 2.75, -10000.0, 0.000099988967937696776398},
    {0.75, 2.75, -2000.0, 0.00049972425487361849316},
    {0.75, 2.75, -150.0, 0.0066178003412911441622},
    {0.75, 2.75, -40.0, 0.024319355902326487502},
    {0.75, 2.75, -10.0, 0.089551480705559107639},
    {0.75, 2.75, -3.0, 0.23330046224677841053},
    {0.75, 2.75, -1.2, 0.38217263843980588598},
    {0.75, 2.75, -0.5, 0.49696426539395921009},
    {0.75, 2.75, 0.3, 0.72412173009684590303},
    {0.75, 2.75, 2.0, 2.4522478179091349258},
    {0.75, 2.75, 10.0, 14066834.401148225816},
    {0.75, 0.5, -10000.0, -0.000020401223115342712867},
    {0.75, 0.5, -2000.0, -0.00010200607207010144789},
    {0.75, 0.5, -150.0, -0.0013599721893797798736},
    {0.75, 0.5, -40.0, -0.0050942181809341622285},
    {0.75, 0.5, -10.0, -0.019917635219723926655},
    {0.75, 0.5, -3.0, -0.044710851077772569578},
    {0.75, 0.5, -1.2, 0.01988008273876702277},
    {0.75, 0.5, -0.5, 0.20043772471309275697},
    {0.75, 0.5, 0.3, 1.0047196656566222825},
    {0.75, 0.5, 2.0, 26.388697429462510208},
    {0.75, 0.5, 10.0, 14066834512.745041912},
    {0.75, 1.7, -10000.0, 0.000096948404051934357014},
    {0.75, 1.7, -2000.0, 0.00048469842172993721309},
    {0.75, 1.7, -150.0, 0.0064536076706325087675},
    {0.75, 1.7, -40.0, 0.024097020510006867142},
    {0.75, 1.7, -10.0, 0.09446315066608253828},
    {0.75, 1.7, -3.0, 0.286934624079387139},
    {0.75, 1.7, -1.2, 0.54987790002439601366},
    {0.75, 1.7, -0.5, 0.79564844029436608711},
    {0.75, 1.7, 0.3, 1.3766533368659857249},
    {0.75, 1.7, 2.0, 8.1588111969786239315},
    {0.75, 1.7, 10.0, 353342907.3691661262},
    {0.9, 1.0, -10000.0, 0.000010513113058088607289},
    {0.9, 1.0, -2000.0, 0.000052600465075947644959},
    {0.9, 1.0, -150.0, 0.00070862302364685818281},
    {0.9, 1.0, -40.0, 0.002743449697792099487},
    {0.9, 1.0, -10.0, 0.012820606051102099938},
    {0.9, 1.0, -3.0, 0.083888354033773262067},
    {0.9, 1.0, -1.2, 0.31439249318454713298},
    {0.9, 1.0, -0.5, 0.603405498695860968},
    {0.9, 1.0, 0.3, 1.3727385680911127209},
    {0.9, 1.0, 2.0, 9.6049277845715006791},
    {0.9, 1.0, 10.0, 451737.77456773740187},
    {0.9, 0.9, -10000.0, 9.4633708077622595853e-10},
    {0.9, 0.9, -2000.0, 2.3689858369672557802e-8},
    {0.9, 0.9, -150.0, 4.2996630116737326229e-6},
    {0.9, 0.9, -40.0, 0.000064491183205842505828},
    {0.9, 0.9, -10.0, 0.001434652362294128595},
    {0.9, 0.9, -3.0, 0.044151271783037726131},
    {0.9, 0.9, -1.2, 0.24916288809273571262},
    {0.9, 0.9, -0.5, 0.53190235156843734154},
    {0.9, 0.9, 0.3, 1.3241629419076747062},
    {0.9, 0.9, 2.0, 10.415849710921111519},
    {0.9, 0.9, 10.0, 583441.78385735659838},
    {0.9, 1.9, -10000.0, 0.000099998948688694184732},
    {0.9, 1.9, -2000.0, 0.00049997369976746199417},
    {0.9, 1.9, -150.0, 0.0066619425131756871903},
    {0.9, 1.9, -40.0, 0.024931413757555195988},
    {0.9, 1.9, -10.0, 0.098717939394889784897},
    {0.9, 1.9, -3.0, 0.30537054865540890583},
    {0.9, 1.9, -1.2, 0.57133958901287741458},
    {0.9, 1.9, -0.5, 0.79318900260827808378},
    {0.9, 1.9, 0.3, 1.24246189363704251},
    {0.9, 1.9, 2.0, 4.3024638922857508072},
    {0.9, 1.9, 10.0, 45173.677456773753019},
    {0.9, 2.9, -10000.0, 0.00009998948884778717455},
    {0.9, 2.9, -2000.0, 0.00049973724299122057969},
    {0.9, 2.9, -150.0, 0.006620014475099779476},
    {0.9, 2.9, -40.0, 0.024346538792797806152},
    {0.9, 2.9, -10.0, 0.089735664868939199305},
    {0.9, 2.9, -3.0, 0.23014110160291381732},
    {0.9, 2.9, -1.2, 0.36270682537032974926},
    {0.9, 2.9, -0.5, 0.45509238340451882233},
    {0.9, 2.9, 0.3, 0.61744871701719433905},
    {0.9, 2.9, 2.0, 1.4485221297781690358},
    {0.9, 2.9, 10.0, 3497.5308904440884946},
    {0.9, 0.5, -10000.0, -0.000026863203845685771762},
    {0.9, 0.5, -2000.0, -0.00013437616358056672353},
    {0.9, 0.5, -150.0, -0.0018041689337018446725},
    {0.9, 0.5, -40.0, -0.006910175485802586628},
    {0.9, 0.5, -10.0, -0.030347874573228821712},
    {0.9, 0.5, -3.0, -0.10025244677360001751},
    {0.9, 0.5, -1.2, -0.04266178321166574836},
    {0.9, 0.5, -0.5, 0.17138027546767609391},
    {0.9, 0.5, 0.3, 0.99188425462177185594},
    {0.9, 0.5, 2.0, 14.252371471374127726},
    {0.9, 0.5, 10.0, 1623461.4435816994817},
    {0.9, 1.7, -10000.0, 0.000085894637701169670358},
    {0.9, 1.7, -2000.0, 0.00042949190406909499048},
    {0.9, 1.7, -150.0, 0.0057304054443919418193},
    {0.9, 1.7, -40.0, 0.02153183176121392248},
    {0.9, 1.7, -10.0, 0.086795337514588274172},
    {0.9, 1.7, -3.0, 0.2848420864194053765},
    {0.9, 1.7, -1.2, 0.56659033891675119493},
    {0.9, 1.7, -0.5, 0.81517179713605380848},
    {0.9, 1.7, 0.3, 1.3403655053971522674},
    {0.9, 1.7, 2.0, 5.2113234371282820101},
    {0.9, 1.7, 10.0, 75354.318988017713458},
    {0.999, 1.0, -10000.0, 1.0007764495030087527e-7},
    {0.999, 1.0, -2000.0, 5.0078860403747485138e-7},
    {0.999, 1.0, -150.0, 6.7611453301490474214e-6},
    {0.999, 1.0, -40.0, 0.000026367543533360512783},
    {0.999, 1.0, -10.0, 0.00017584834590871162024},
    {0.999, 1.0, -3.0, 0.050156199194891236565},
    {0.999, 1.0, -1.2, 0.30131232404731156476},
    {0.999, 1.0, -0.5, 0.60648529133691131554},
    {0.999, 1.0, 0.3, 1.3500878726719295761},
    {0.999, 1.0, 2.0, 7.4064495401776802385},
    {0.999, 1.0, 10.0, 22563.209925678138913},
    {0.999, 0.999, -10000.0, 9.9997542274302370798e-12},
    {0.999, 0.999, -2000.0, 2.5039419471815154501e-10},
    {0.999, 0.999, -150.0, 4.564532505137893288e-8},
    {0.999, 0.999, -40.0, 6.9523419239463188346e-7},
    {0.999, 0.999, -10.0, 0.000062786560858997972278},
    {0.999, 0.999, -3.0, 0.049716804248493058393},
    {0.999, 0.999, -1.2, 0.30063195279309601981},
    {0.999, 0.999, -0.5, 0.60578914109663759855},
    {0.999, 0.999, 0.3, 1.3496844241121379066},
    {0.999, 0.999, 2.0, 7.4119520507151378248},
    {0.999, 0.999, 10.0, 22615.275713843277929},
    {0.999, 1.999, -10000.0, 0.000099999989992235511377},
    {0.999, 1.999, -2000.0, 0.00049999974960569801328},
    {0.999, 1.999, -150.0, 0.0066666215923644660953},
    {0.999, 1.999, -40.0, 0.024999340811411667518},
    {0.999, 1.999, -10.0, 0.099982415165409133991},
    {0.999, 1.999, -3.0, 0.31661460026836959291},
    {0.999, 1.999, -1.2, 0.58223972996057370807},
    {0.999, 1.999, -0.5, 0.78702941732617734264},
    {0.999, 1.999, 0.3, 1.1669595755730985656},
    {0.999, 1.999, 2.0, 3.2032247700888397818},
    {0.999, 1.999, 10.0, 2256.2209925678133139},
    {0.999, 2.999, -10000.0, 0.000099989994236405148678},
    {0.999, 2.999, -2000.0, 0.00049974985611053918956},
    {0.999, 2.999, -150.0, 0.0066221971966458191802},
    {0.999, 2.999, -40.0, 0.024374672192667221844},
    {0.999, 2.999, -10.0, 0.089997124495839593469},
    {0.999, 2.999, -3.0, 0.22777988330397267776},
    {0.999, 2.999, -1.2, 0.34820518861286726918},
    {0.999, 2.999, -0.5, 0.42641535359679687754},
    {0.999, 2.999, 0.3, 0.55459262914912852209},
    {0.999, 2.999, 2.0, 1.1000933519809363685},
    {0.999, 2.999, 10.0, 225.00263428340908562},
    {0.999, 0.5, -10000.0, -0.000028212550269273515936},
    {0.999, 0.5, -2000.0, -0.00014114738601479892078},
    {0.999, 0.5, -150.0, -0.0018996543474975301613},
    {0.999, 0.5, -40.0, -0.0073342680017008225131},
    {0.999, 0.5, -10.0, -0.034254796669498730156},
    {0.999, 0.5, -3.0, -0.14687818361497046782},
    {0.999, 0.5, -1.2, -0.086670732103296261161},
    {0.999, 0.5, -0.5, 0.155422281761430591},
    {0.999, 0.5, 0.3, 0.97941447174919557391},
    {0.999, 0.5, 2.0, 10.567081737892059988},
    {0.999, 0.5, 10.0, 71433.43539284143384},
    {0.999, 1.7, -10000.0, 0.000077134556726674572268},
    {0.999, 1.7, -2000.0, 0.00038571884616529495179},
    {0.999, 1.7, -150.0, 0.0051524681326967717453},
    {0.999, 1.7, -40.0, 0.019431842074549004053},
    {0.999, 1.7, -10.0, 0.079839307027683162699},
    {0.999, 1.7, -3.0, 0.28320221595436232215},
    {0.999, 1.7, -1.2, 0.58033152220451594639},
    {0.999, 1.7, -0.5, 0.82934293108967503072},
    {0.999, 1.7, 0.3, 1.318422064974804145},
    {0.999, 1.7, 2.0, 4.2097411190683231203},
    {0.999, 1.7, 10.0, 4494.6194903961019252},
};

inline constexpr double kGamma3p7 = 4.1706517837966031654;
inline constexpr double kKernel0p25At0p01 = 8.7220570889250494499;
inline constexpr double kMlHalfOneMinus3 = 0.17900115118138995042;

}  // namespace fracopt_test
