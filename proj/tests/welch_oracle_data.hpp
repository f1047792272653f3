// Generated by tests/tools/gen_welch_oracle.py -- do not edit.
// Reference values computed with scipy.stats.ttest_ind(equal_var=False)
// plus the Welch-Satterthwaite degrees of freedom.
#pragma once

#include <vector>

struct WelchOracleCase {
    std::vector<double> x;
    std::vector<double> y;
    double t;
    double df;
    double p;
};

inline const std::vector<WelchOracleCase>& welch_oracle_cases() {
    static const std::vector<WelchOracleCase> cases = {
        {{1, 2, 3, 4, 5},
         {2, 3, 4, 5, 6},
         -1, 8, 0.34659350708733416},
        {{1, 2, 3, 4, 5},
         {1, 2, 3, 4, 5},
         0, 8, 1},
        {{0, 0, 1, 2, 0, 1},
         {3, 4, 2, 5, 4, 3},
         -5.221508493088586, 9.4325050369375401, 0.00047061474288635156},
        {{10.5, 11.25, 9.75},
         {10, 10.5, 11, 9.5, 10.25},
         0.5, 3.3684210526315788, 0.64793791354187769},
        {{0, 1},
         {5, 9},
         -3.1529631254723287, 1.1245136186770428, 0.17289630844487799},
        {{2, 2, 2, 3},
         {2, 2, 2, 2, 2, 4},
         -0.20000000000000034, 7.9923273657289, 0.84647568251158067},
        {{-4.2918592144816339, -5.1051947617390123, -1.3879488307246897, -6.3438259440077989, -1.7998827412955105, -1.6453487492916805, -4.374239551673754},
         {-1.7921516845746142, -1.8018266458309531, 5.1049379434909863, 2.7669719012561509, -7.5163976012697704, 1.9108190889293852, 2.7876469545226463, -0.195673060650875, -8.3075297919259352, -7.2746767960407501, 2.0624751845229592, -0.21572876772149718, -3.6513578593424842, 5.3928748731413307, 2.1471757723033216, 0.25660451980420862, -1.2586919668913292, 4.4243424460880538, 1.1664487482519108, 2.8633901697227633, -1.7771277152900311, -3.5368912905247969, 5.2902812304542755, 1.0163882804543203, -7.1330593469258812, -4.566793129788751},
         -2.8445694709050535, 21.565540888848791, 0.0095460584244907876},
        {{8, 12, 9, 12, 14, 3, 9},
         {6, 12, 10, 4},
         0.69020138565197431, 6.2864752500974399, 0.51472907374270938},
        {{77.519999999999996, 50.340000000000003},
         {22.550000000000001, 34.670000000000002, 77.060000000000002, 13.029999999999999, 24.100000000000001, 76.799999999999997, 14.630000000000001, 47.200000000000003, 85.280000000000001, 11.82, 28.829999999999998, 70.989999999999995, 26.640000000000001, 25.149999999999999, 22.27, 44.770000000000003, 11.109999999999999},
         1.7765513575508711, 1.440178270466262, 0.26377998715947432},
        {{3.1113646895371656, 2.4194753128731841, 1.3172660472736586, 2.503712985457951, -2.47441466774705, 8.0796980206778244, -2.8735296750684345, 2.8195244217536981, -0.27516781942097568, 1.7918375761746828, 4.3547094976721032, 4.9727985627122919, 9.7542878079377662, 4.8982834715246142, -0.87295311037265355, 0.33463906225518958, 3.9506077559766077, 7.4026455871529127, 5.9208911880272748},
         {-2.9791435900705956, -5.1031891935826428, -2.7507814392378247, -3.6955768636005959, -2.5885521134359428, -0.76351301694506835, -1.5005731637194177, -1.863707437769683, -3.8912417097678915, -2.8718312464388416, -0.42715561748880471, 0.51453675376776076, -2.7557513084125898, -0.99397463861789603, -1.3663646881176428, 0.96144192767480252, -1.1169850259319642, -0.89098625034518752, -1.2428290398926438, -2.2677190595796648, -2.8140283974121743, -1.5697260610499555, -4.8001616416796615, -1.514076464532907, -1.3362007269840992, -3.5002813815119991, -2.1432539506057986, -0.29349567245965158, -2.9909873513605763},
         6.0466611899371161, 22.218956109072437, 4.1932922036359031e-06},
        {{3, 2, 1, 2, 2, 3, 3, 2, 0, 2, 1, 3, 6, 1, 3, 7, 3, 2, 3, 1, 4, 1, 3, 1, 3, 7, 3, 4, 0},
         {7, 8},
         -8.167075993254592, 2.0251584282481483, 0.014132097942484573},
        {{66.319999999999993, 70.370000000000005, 74.819999999999993, 94.629999999999995},
         {76.650000000000006, 79.049999999999997, 97.170000000000002},
         -0.8598256297272806, 4.7356980436695428, 0.43124872838414474},
        {{5.0951548163448503, -1.0512750907212369, 3.284650298979829, -4.5783359417918925, 5.8753907879353058, 3.4496611365739835, -4.9473165932347634, -4.3433550823560587, -5.4235243067375505, -3.1305938390788137, -1.7981571086014743, 10.378164858433369, -7.492763048373396, -1.3142312761797412, 0.18816918135309013, 0.76459181876131854, 3.2633786099342941, -3.5618684669204286},
         {0.77186395355222948, -0.9758771771428687, 2.1630675794496881, -0.65960927266028757, 0.34307988175037435, 1.8801362430645034, -0.72012865134503423, -1.2407349874104177, 0.88684316536402419, 1.0446121403256972, 1.4552829139083434, 3.0950547037360043, 1.6000321785181173, 3.117698090877969, -0.48333242555778688, 0.933782347205664, 0.86140166464211576, 0.8674420637120871, -0.46907327146960864, 1.1634040386365876, 2.739734708474205, -0.29541571388109777, 1.7235679269410347, 0.060391121059512498},
         -0.98442977752911953, 18.825576818442432, 0.33738811026989024},
        {{5, 1, 2, 3, 0, 0, 2, 2, 2, 3, 0, 2, 0, 2, 2, 1, 2},
         {4, 5, 2, 4, 3, 6, 3, 4, 7, 2, 5, 5, 1, 3, 5, 3, 3, 4, 4, 1, 5, 2, 3, 2, 4},
         -4.3316208091891051, 37.394445741728426, 0.00010689421467653784},
        {{95.400000000000006, 35.869999999999997, 96.400000000000006, 52.060000000000002, 28.93, 17.379999999999999, 91.819999999999993, 66.569999999999993, 10.130000000000001, 51.450000000000003, 18.469999999999999, 92.680000000000007, 4.2000000000000002, 31.27, 97.189999999999998, 94.319999999999993},
         {73.180000000000007, 55.829999999999998, 19.449999999999999, 11.07, 44.340000000000003, 32.030000000000001, 73.909999999999997, 71.019999999999996, 26.030000000000001, 69.5, 12.779999999999999, 73.239999999999995, 13.220000000000001, 91.530000000000001, 35.530000000000001, 3.5800000000000001, 44.409999999999997, 88.409999999999997, 63.259999999999998, 16.140000000000001, 99.25, 7, 36.579999999999998, 11.779999999999999, 98.459999999999994, 91.920000000000002, 91.109999999999999, 88.519999999999996},
         0.34656282703107943, 29.395175145067174, 0.73138841442548341},
        {{-1.8031431286594513, -2.0995487385162814, -2.5741506629383588, -3.0388574680959834, 0.13511700606548338, -3.4465679168823904, -5.5665909571834593, 5.6278272313728746, -2.6907099043929485, -2.0814586260169499, -6.2133468651739321, -4.0975509904163721, 0.71637751465540145, -4.3292441509007507, -3.5402298118801401, -5.6492279832891237, -3.5863964539702575, -1.1442276480494897, -3.322080609635381, -2.1203741789316877},
         {-4.3734846447508771, 0.53475994657260695, 0.44333481717652368, -1.3992702497518981, 0.26752341122655215, -1.3628483720494764, -0.53102375813644487, -0.2274518501014523, 1.6052973485287385, -4.8363429603072348, 0.065706464565457562, 0.85684277921817931, -1.5848403434631539, 0.62986315448980357, 1.1704474290937044, 0.8575629124805404},
         -2.7483989410973515, 33.607432023781598, 0.0095610017256044424},
        {{11, 13, 5, 4, 9, 10, 11, 12, 6, 9, 12, 8, 9, 10, 10, 6, 10, 10, 8},
         {2, 1},
         10.116334882256814, 4.6960918399038087, 0.00023001514927111486},
        {{5.9100000000000001, 60.560000000000002, 94.010000000000005, 92.739999999999995, 63.579999999999998, 85.329999999999998, 1.9099999999999999, 22.140000000000001, 9.5, 45.140000000000001},
         {93.269999999999996, 74.040000000000006, 34.859999999999999, 98.609999999999999, 63.490000000000002, 61.579999999999998, 92.659999999999997, 72.829999999999998, 94.519999999999996, 32.07, 15.59, 47.43, 63.899999999999999},
         -1.2355146046640753, 15.863826411999405, 0.23462379850356505},
        {{0.45979645522064683, 5.2268142067662868, -3.8313652884445313, 2.6960642809845297, 2.7605906920249619, 4.5049052984342248, -1.1780275966214391, 1.9151865446549206, -0.33071927506867249, 5.3196305191600874, 7.9967159336400639, 6.4231535269036479, -0.9209619071732309, 1.7084206169639047, 0.82266385697793742, 2.9687461086625841, 2.100337695918725, 3.2383224634349386, 5.4598836780614848, 3.483398033993554, 5.7298816957757186, -1.1733303120378875, -0.86468987848082168, -1.4548463095873654, 10.148694964035974, -0.28066713001273502, 1.6386415702617185, 2.8218910299716642, 2.3728769606805256},
         {-1.2830116888665624, -2.2762472932450555, -7.9100781602881707, -4.9748480392749013, -4.6830592275610492, -1.9327004815833904, -3.7259331914433771, -1.0952733450603547, -1.59912573403425, -2.7077746131405709, -1.0965329670174657, -2.8502531657994994},
         6.5613235091439899, 31.395745784310527, 2.3639107395699211e-07},
        {{9, 13, 12},
         {8, 13, 12, 12, 13, 10, 17, 9, 15, 11, 15, 12, 11, 18, 16},
         -1.0349565200621822, 3.7836801685151458, 0.36224560630083585},
        {{98.170000000000002, 58, 93.959999999999994, 86.730000000000004, 12.52, 93.540000000000006, 68.359999999999999, 18.699999999999999, 36.359999999999999, 7.4500000000000002, 85.189999999999998, 20.289999999999999, 52.899999999999999, 11.210000000000001, 78.849999999999994, 77.069999999999993, 92.400000000000006, 76.870000000000005, 61.640000000000001, 2.6099999999999999, 73.870000000000005, 0.080000000000000002, 89.349999999999994, 53.850000000000001, 52.670000000000002},
         {71.829999999999998, 26.829999999999998, 39.759999999999998, 56.409999999999997, 20.300000000000001, 33.719999999999999, 33.219999999999999, 93.010000000000005, 20.93, 21.039999999999999, 67.129999999999995, 99.629999999999995, 36.259999999999998, 32.240000000000002, 42.270000000000003, 46.689999999999998, 63.799999999999997, 27.210000000000001, 88.769999999999996, 52.210000000000001, 67.519999999999996, 31.109999999999999, 79.790000000000006, 68.810000000000002, 69.849999999999994, 59.030000000000001, 88.459999999999994},
         0.3533275466653007, 43.865023388997074, 0.72553536414909847},
        {{2.6028747734566768, 1.9659637044978882, 1.7264428558305864, 2.0302158511588835, 0.85053872458531177, 1.9230423255623779, 2.2196920590443021, 1.0860654939188106, 1.6891880717497108, 1.5262965870909435, 1.410268085690968, 3.520069893629211, 1.7721890040984394, 1.8542799450036387, 2.2568490710391917, 3.4211616560402325, 1.8776502546672931, 2.1240248605002492, 2.4983064211209269, 1.8143773518765995, 2.8731983457142336, 2.1898189806986612, 2.2365985954263983, 2.1660011223634852, 3.5821235064207371, 1.5382717052854877, 1.9104552586786514},
         {-1.2021475471036216, -0.90852676994034587, 3.2859139651081897, 0.69010739677185573, -2.5840237957756109, 2.8098355041638046, -5.6316570425085581, 0.41749661879969985, -0.93402377286083915, 1.7081253170599009, 0.0055127028975915371, 4.0641618779835929, -1.3817401547865074, -0.39851460010630468, -2.7160867784331595, 4.0099649267804747, 2.6106860619075967, 4.6453190170422198, -1.6018522091379994, 4.4838364065041185, 4.7323386244030496, 1.8981719511287922, 2.1072768045577863},
         2.0642937968615991, 24.142011322216565, 0.049893735210606839},
        {{1, 1, 2, 3, 0, 0, 3, 1, 0, 0, 1, 0, 4, 1, 1},
         {18, 7, 10, 15, 11, 10},
         -6.4303539126943132, 5.4109740204461358, 0.0010015090721702418},
        {{29.190000000000001, 68.310000000000002, 31.91, 72.230000000000004, 11.41, 98.739999999999995, 20.039999999999999, 83.480000000000004, 24.620000000000001, 17.100000000000001, 99.670000000000002, 74.670000000000002, 3.7999999999999998, 36.130000000000003, 45.359999999999999, 92.340000000000003, 77.180000000000007, 73.709999999999994, 25.98, 50.640000000000001, 17.620000000000001, 48.990000000000002, 46.840000000000003, 89.780000000000001, 60.090000000000003, 43.539999999999999},
         {44.619999999999997, 0.059999999999999998, 7.2800000000000002, 48.869999999999997, 5.5599999999999996, 57.079999999999998, 23.370000000000001, 24.09, 64.200000000000003, 47.399999999999999},
         2.0959729008185057, 20.472259501077676, 0.048704955713711369},
        {{-1.6871333062525737, -3.9245537219097963, 0.26524213581652178, -1.4511892502011712, -1.3299828607731541, -5.3763100238999808, -3.1244746775451757, -3.5128649673389609, -2.4323920021951482, -2.8694118909508743, -0.30699886073473515, -2.1554605735122196, -1.9204572276510867},
         {1.1348902806170962, -0.66479875174961789, -3.6605940724290837, -0.12821021038817815, -4.6307942255367092, -1.2021200017199967, -2.2450560062940843, -0.46966883820983663, -0.94894681717429208, -5.6589541804378634, -6.208752676950775, -5.6065786596211424, -0.65852496960410045, -2.0503682373754311, -3.7513664920268321, -5.751007342353823},
         0.49730179833686516, 25.659479412741739, 0.62321092942078149},
        {{3, 2, 2, 1, 1, 2, 1, 3, 3, 3, 4, 3, 2, 0},
         {5, 11},
         -1.9430826398091903, 1.019271982646643, 0.29892886013421649},
        {{16.16, 89.489999999999995, 6.7699999999999996, 31.649999999999999, 62.259999999999998, 97.890000000000001, 69.239999999999995, 96.989999999999995, 75.799999999999997, 93.510000000000005, 22.149999999999999, 12.300000000000001},
         {28.260000000000002, 81.560000000000002, 15.67, 91.280000000000001, 89.829999999999998, 28.120000000000001, 52.340000000000003, 24.690000000000001, 73.769999999999996, 99.269999999999996, 83.480000000000004, 77.329999999999998, 83.459999999999994, 13.029999999999999, 62.030000000000001},
         -0.31413512719597292, 21.635814144942444, 0.75642737120996317},
        {{-3.9545750783370046, 2.0348264699967804, 3.4478327716086921, 0.88795694233864686, 0.11025227244425606, 2.0506087774912447, -1.12166347757839},
         {3.3950836856880278, 5.948504353315399, -0.42759259802042893, 0.047911053946580351, 1.5498736747690973, 1.2224661887508264, 0.20554046908164669, -0.0097547953681094146, 2.8401172525280076, 1.0963090029183109, 2.7942298873702986, 5.6475660059952961, 2.3167172937028586, 3.4580978739140864, -2.135041211317807, 3.5438728136250099, 4.9178245854037685, -1.5262228295138893, 4.5932668188082433, 1.4000422947256719, 0.23741481005043541, 0.009094869634622027, -4.5379291856285171, 1.8063146177087483, 4.7498932492207313, 0.034702235066863318},
         -1.1093652764039124, 9.6935624253628241, 0.2940352561338847},
        {{7, 7, 6, 7, 3, 7, 10, 2, 10, 6, 7, 9, 4, 5, 3, 10, 6, 7, 7, 3, 10, 6},
         {3, 5, 8, 5, 6, 9, 10, 4, 8, 10, 4, 9, 6, 8, 6, 5, 12, 8, 5, 8, 4, 5, 9, 6, 8},
         -0.55665482375814879, 43.56219248254817, 0.58061193531189792},
        {{23.100000000000001, 22.82, 1.1399999999999999, 0.39000000000000001, 75.879999999999995, 8.3900000000000006, 92.609999999999999, 95.900000000000006, 25.030000000000001, 97.5, 45.289999999999999, 57.340000000000003, 39.43, 90.359999999999999, 63.640000000000001, 63.600000000000001},
         {63.189999999999998, 21.719999999999999, 68.510000000000005, 36.780000000000001, 35.810000000000002, 72.609999999999999, 47.509999999999998, 51.579999999999998, 47.909999999999997, 19.09, 98.290000000000006, 42.780000000000001, 58.399999999999999, 79.239999999999995, 68.489999999999995, 54.479999999999997, 81.510000000000005},
         -0.55937574896230913, 24.792370989404905, 0.58092401233019886},
        {{-1.5855764799791989, -1.0400358797719766, -3.3279309060833846, -1.4517575208108311, 0.096684725673131133, 4.9349443411155907, 4.7694255977401143, 2.0217745132712932, -4.2215563574992503, -0.9088159572301614, -0.98430187715215134, -7.0195676315305144},
         {-6.6243789108523998, -6.2759831174972103},
         5.669481662885544, 11.565644527563197, 0.00011961941429413801},
        {{2, 1, 2, 3, 2, 3, 1, 2, 2, 3, 0, 7, 3, 2, 2, 2, 3, 5, 4, 2, 3, 1, 2},
         {4, 6, 10, 6},
         -3.1086483847170174, 3.35083266675456, 0.045630621498494638},
        {{56.530000000000001, 25.989999999999998, 47.07, 10.720000000000001, 89.540000000000006, 17.969999999999999, 24.32, 89.879999999999995, 87.489999999999995, 53.520000000000003},
         {75.599999999999994, 26.870000000000001, 65.099999999999994, 29.899999999999999, 0.46000000000000002, 31.550000000000001},
         0.81301761852378429, 11.615982405635778, 0.43255631818509643},
        {{0.0825525277514223, -1.4552494032505034, -1.1910462975543339, 1.0503128394258896, -3.3331684083691213, -1.7058944832468794, -1.2514739918689621, -0.64195450545880495, 2.6526533390959646, 6.2060389535760532, 0.69917167137533975, -2.5064531946923445, -0.28005361482319979, -2.4973756304620824, 0.24932039553358765, -8.5092559828950716, -8.0171671556481563, -7.8977548869799676, -5.0175777367865928, 2.3303761724425818, -3.7535985218014472, -3.0592196884718734, 1.9365249148682331},
         {1.8436509424804282, 5.6156487628679939, 3.3489078195502233, 3.32221613581945, 4.0409855438321829, 4.0635629512272402, 2.9554354053523921, 2.4811414322606051, 7.7470521444524918, 3.4483382168465249, 3.0407593694686907, 4.7497180733984123, 3.1047387095826764, 4.2412078371377566, 2.909873785238319, 3.403250077146978, 1.0096185997038032, 4.3392938500909706, 2.8511983846557349, 3.0974327926310403, 3.9475142433434942},
         -6.4337100555592022, 28.856991627742811, 4.9946187297767329e-07},
        {{5, 5, 6, 12, 8, 3, 13, 7, 8, 4, 4, 8, 6, 9, 4, 9, 6, 10, 6, 5, 4},
         {7, 10, 7, 10, 10, 7, 10, 12, 9, 6, 8},
         -2.4143198880238819, 27.707630718491508, 0.022624470686406811},
        {{62.380000000000003, 98.510000000000005, 8.0199999999999996, 3.0899999999999999, 61.640000000000001, 98.189999999999998, 31.719999999999999, 97.599999999999994, 1.6299999999999999, 79.030000000000001, 13.119999999999999, 90.980000000000004, 23.559999999999999},
         {28.149999999999999, 40.880000000000003, 8.2400000000000002, 26.489999999999998, 47.530000000000001, 59.759999999999998, 28.41, 39.009999999999998, 90.189999999999998, 48.460000000000001, 90.650000000000006, 67.829999999999998, 19.550000000000001, 40.600000000000001, 48.530000000000001, 27, 77, 65.760000000000005, 49.469999999999999, 47.979999999999997, 41.109999999999999, 2.1899999999999999, 36.840000000000003, 30.5, 17.690000000000001, 41.969999999999999, 18.039999999999999, 65.819999999999993, 24.030000000000001},
         0.78200668728855283, 15.607488868914119, 0.44591296890841725},
        {{-2.0255113462522916, -0.771467903965803, -2.0030943007333613, -3.0280121752991178, -0.027336798101522231, 4.8713884864851469, -1.5856836502812444, -1.1181454077419291, 0.81214163084243873, -10.461375184461712, -4.081601174280455, 0.12569992492661619, -4.103692351952553, 2.3920079952987297, 2.8275695973307546, -3.4161612120812759, -3.3064120379031769, -4.9201658648702162, -7.198809579041189, -0.2905740597041131, -1.7951895097759354, -0.17784610389934485, -4.595580869573757, -4.4320490746929071, -5.0808130778818583},
         {-0.31558380524983687, 1.5406730941210962, -2.3545109761526932, 1.1988251030402881},
         -1.9520419409758418, 6.8986075504122821, 0.092498707193435392},
        {{2, 3, 4, 2, 0, 2, 2, 2, 7, 0, 0, 5, 2, 4, 0, 3, 1, 1},
         {8, 15, 9, 7, 12, 9, 13, 11, 8, 11, 3, 9, 2, 13, 5, 7, 2, 4, 9, 9, 9, 4, 11, 8, 6},
         -7.1726652002772715, 38.586230117976164, 1.3195365666065614e-08},
        {{63.509999999999998, 87.609999999999999, 46.920000000000002, 69.349999999999994, 37.039999999999999, 71.060000000000002, 94.870000000000005, 87.239999999999995, 42.039999999999999, 95.859999999999999, 60.950000000000003, 39.460000000000001, 24.039999999999999, 23.670000000000002, 5.2800000000000002, 16.02, 29.859999999999999, 28.300000000000001, 40.210000000000001},
         {51.75, 59.649999999999999, 51.990000000000002, 93.719999999999999, 99.069999999999993},
         -1.6835471947322052, 7.3318635380339217, 0.13420116618732494},
        {{-3.3770620026297946, 1.9705348300890333, -4.6422799464647735, -1.1806472989556096, -4.7268943661728695, -2.024120345794993, -5.5259815297485364, -3.7131510468727584, 1.3780951259679246, -3.2538274260297007, -3.5746805562216988, -2.7546303723941423, -4.6824223814212722, -3.4883276222469237, 2.7785375519022044, 0.80142542688640894, 2.520374855959036, 1.5408117622720057, 0.61224705803633972, 0.1674383640218795, -2.5119403045677258, -5.4057340098049611, -1.6908545361683482, -2.4002223324216048, -5.4634014236917317, 1.3562016972382716, -2.5907005145546753, -2.3637160320470749},
         {-3.9962554796535712, -3.8004877823494314},
         4.0400942606226264, 27.996265922436717, 0.00037741503393088813},
        {{3, 1, 3, 0, 1, 1, 1, 2, 1, 1},
         {13, 14, 13, 14, 13},
         -30.645235107314946, 12.586913417052218, 3.3345666060503172e-13},
        {{33.990000000000002, 85.189999999999998, 85.829999999999998, 60.049999999999997, 23.870000000000001, 10.35, 44.75, 76.069999999999993, 65.290000000000006, 38.009999999999998, 31.809999999999999, 92.450000000000003, 97.650000000000006, 9.9700000000000006, 1.1899999999999999, 77.480000000000004, 34.82},
         {75.870000000000005, 50.090000000000003, 33.700000000000003, 33.310000000000002, 45.810000000000002, 54.909999999999997, 33.060000000000002, 43.560000000000002, 87.299999999999997, 47.659999999999997, 15.42, 59.380000000000003, 65.569999999999993, 98.109999999999999, 34.5, 54.399999999999999, 32.810000000000002},
         0.021204119029107269, 28.365068606238484, 0.98323128924774195},
        {{-0.0013319028950844469, 0.72252783300703605, 1.2822411573171593},
         {-4.0812370438968735, -4.5686000326655662, -4.1673155963974713, -5.9743758842383912, 0.32625299481838343, -5.6974758058389057},
         4.6956508055074853, 6.3245984254884418, 0.0029078202698717957},
        {{2, 0, 3, 1, 1, 1, 5, 2, 3, 2, 0, 3, 1},
         {3, 1, 3, 3, 1, 3, 0, 1, 3, 1, 2, 5, 3, 1},
         -0.55855427811244729, 24.6649225970645, 0.58150181150903379},
        {{64.170000000000002, 45.619999999999997, 45.369999999999997, 6.5599999999999996, 19.66, 98.189999999999998, 12.859999999999999, 72.819999999999993, 77.719999999999999, 24.84, 78.549999999999997},
         {86.459999999999994, 72.180000000000007, 77.180000000000007, 58.950000000000003, 45.640000000000001, 23.859999999999999, 98.780000000000001, 61, 74.049999999999997, 40.649999999999999, 27.370000000000001, 36.939999999999998, 13.1, 85.540000000000006, 98.659999999999997, 86.609999999999999, 20.300000000000001, 20.48, 92.260000000000005},
         -0.80857135773622701, 20.199695294813147, 0.42818273601570189},
        {{-3.0358144223042869, 0.55985834857734984, -1.7429986189521458, 2.080930032614051, -3.1092321483945526, -0.59780203537629373, -0.94077991941285288, 0.86893200361056344, 1.6980377366995623, 2.0550337535579524, -1.9862558673042727, -0.47428562869775059, -3.0442768949575125, 0.9331734555422766, -3.0882792005246187, -0.35900630070715772, 1.7967018980293235, -2.7215527942253472, 5.8764627473991133, -0.65461172818723234, -1.551674260635248, -2.1113232807061735},
         {-4.1640057237685335, -6.8656551435465083, -5.696166412547166, -6.3405171821548496, -3.601406155919066, -5.9049657767299149, -4.1147150231757639, -6.4213004920218477, -4.669108897931098, -8.4283870564737153, -5.9238631602456264, -2.3634973925889016, -3.4732716491527826, -2.285724353784786, -6.1294345226325708, -4.9905206651867715, -6.1195066747363454, -3.9279030802520274, -4.4186658413177486, -2.174627790315999, -6.4987745167000579, -4.6450172575270203, -0.72562674574714769, -2.3145768398976259},
         6.9133430023121836, 40.635026085191321, 2.2856219986846475e-08},
        {{2, 2, 1, 2, 2, 0, 1, 1, 1, 4, 4, 0, 3, 0, 0, 2, 3},
         {0, 1, 0, 0, 0},
         3.8332361213883468, 19.218062293659383, 0.001102288147128582},
        {{59.850000000000001, 96.120000000000005, 91.180000000000007, 32.710000000000001, 55.07, 82.079999999999998, 23.68, 18.350000000000001, 88.5, 51.990000000000002, 42.340000000000003},
         {90.719999999999999, 30.390000000000001, 15.31},
         0.52524512596645745, 2.5568725817971467, 0.64149396317990148},
        {{-2.446733752696892, -2.9252728850875251, -6.4214122478721976, -3.1908224300290127, -1.2262264956616666, -0.39291166793897014, -2.2323939641023847, -3.9821184773260949},
         {-7.7076124518692497, -5.8101185850166015, -5.6713721779843826, -8.6238531283349591, -4.510160344561398, -4.195560146602979, -0.91694119109553718, -0.7507988657736937, -2.8949684190931664, -4.6155584225705235, -0.88184269946274796},
         1.3334272787206738, 16.962088834176598, 0.20002332015924579},
        {{4, 1, 0, 0},
         {3, 3, 7, 1, 3, 2, 2, 3, 2, 4, 0, 1, 4, 2, 1},
         -1.2320168963475826, 4.3593965720278787, 0.28022826742461299},
    };
    return cases;
}
