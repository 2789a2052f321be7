// Known-good exact constants for the verification ledger: transition
// matrices, Perron vectors and limit covariances for the protected-node,
// leaf and one-protected-node urns at m = 2 and m = 3.  Entries are
// rational literals parsed at load time; see reference_data.hpp for the
// layout of each table.

#include "polyurn/reference_data.hpp"

namespace polyurn::refdata {

const char* const kBinaryA[5 * 5] = {
    "-4/1", "1/1", "0/1", "0/1", "0/1",
    "4/1", "-1/1", "2/1", "0/1", "0/1",
    "4/1", "0/1", "-2/1", "1/1", "0/1",
    "0/1", "2/1", "0/1", "-1/1", "0/1",
    "0/1", "0/1", "2/1", "0/1", "0/1",
};

const char* const kBinaryB2[5 * 5] = {
    "1/3", "-1/3", "0/1", "0/1", "0/1",
    "-1/3", "1/3", "0/1", "0/1", "0/1",
    "0/1", "0/1", "0/1", "0/1", "0/1",
    "0/1", "0/1", "0/1", "2/3", "0/1",
    "0/1", "0/1", "0/1", "0/1", "0/1",
};

const char* const kBinaryB[5 * 5] = {
    "3/10", "-3/10", "-2/15", "0/1", "0/1",
    "-3/10", "1/2", "-1/15", "0/1", "1/5",
    "-2/15", "-1/15", "1/2", "-1/6", "-1/5",
    "0/1", "0/1", "-1/6", "1/2", "0/1",
    "0/1", "1/5", "-1/5", "0/1", "1/5",
};

const char* const kBinarySigma[5 * 5] = {
    "43/1575", "-67/2520", "-113/12600", "-29/2520", "1/1400",
    "-67/2520", "23/420", "-1/42", "-13/1260", "71/2520",
    "-113/12600", "-1/42", "443/6300", "-1/30", "-59/1800",
    "-29/2520", "-13/1260", "-1/30", "181/1260", "-11/504",
    "1/1400", "71/2520", "-59/1800", "-11/504", "13/450",
};

const char* const kBinaryV1[5] = {"1/30", "1/6", "1/10", "1/6", "1/5"};

const char* const kBinaryActivities[5] = {"4/1", "3/1", "2/1", "1/1", "0/1"};

const char* const kTernaryA[19 * 19] = {
    "-9/1", "2/1", "0/1", "0/1", "0/1", "0/1", "0/1", "0/1", "0/1", "0/1", "0/1", "0/1", "0/1", "0/1", "0/1", "0/1", "0/1", "0/1", "0/1",
    "0/1", "-8/1", "4/1", "1/1", "0/1", "0/1", "0/1", "0/1", "0/1", "0/1", "0/1", "0/1", "0/1", "0/1", "0/1", "0/1", "0/1", "0/1", "0/1",
    "0/1", "0/1", "-7/1", "0/1", "6/1", "0/1", "1/1", "0/1", "0/1", "0/1", "0/1", "0/1", "0/1", "0/1", "0/1", "0/1", "0/1", "0/1", "0/1",
    "0/1", "0/1", "0/1", "-7/1", "0/1", "0/1", "2/1", "0/1", "0/1", "0/1", "0/1", "0/1", "0/1", "0/1", "0/1", "0/1", "0/1", "0/1", "0/1",
    "0/1", "0/1", "0/1", "0/1", "-6/1", "0/1", "0/1", "0/1", "1/1", "0/1", "0/1", "0/1", "0/1", "0/1", "0/1", "0/1", "0/1", "0/1", "0/1",
    "9/1", "0/1", "0/1", "0/1", "0/1", "-6/1", "0/1", "2/1", "0/1", "0/1", "0/1", "0/1", "0/1", "0/1", "0/1", "0/1", "0/1", "0/1", "0/1",
    "0/1", "0/1", "0/1", "0/1", "0/1", "0/1", "-6/1", "0/1", "4/1", "2/1", "0/1", "0/1", "0/1", "0/1", "0/1", "0/1", "0/1", "0/1", "0/1",
    "0/1", "6/1", "0/1", "0/1", "0/1", "0/1", "0/1", "-5/1", "0/1", "0/1", "4/1", "1/1", "0/1", "0/1", "0/1", "0/1", "0/1", "0/1", "0/1",
    "0/1", "0/1", "0/1", "0/1", "0/1", "0/1", "0/1", "0/1", "-5/1", "0/1", "0/1", "0/1", "2/1", "0/1", "0/1", "0/1", "0/1", "0/1", "0/1",
    "0/1", "0/1", "0/1", "0/1", "0/1", "0/1", "0/1", "0/1", "0/1", "-5/1", "0/1", "0/1", "2/1", "0/1", "0/1", "0/1", "0/1", "0/1", "0/1",
    "0/1", "0/1", "3/1", "0/1", "0/1", "0/1", "0/1", "0/1", "0/1", "0/1", "-4/1", "0/1", "0/1", "0/1", "1/1", "0/1", "0/1", "0/1", "0/1",
    "0/1", "0/1", "0/1", "6/1", "0/1", "0/1", "0/1", "0/1", "0/1", "0/1", "0/1", "-4/1", "0/1", "0/1", "2/1", "0/1", "0/1", "0/1", "0/1",
    "9/1", "6/1", "3/1", "6/1", "0/1", "6/1", "3/1", "3/1", "0/1", "3/1", "0/1", "3/1", "-4/1", "3/1", "0/1", "0/1", "0/1", "0/1", "0/1",
    "0/1", "0/1", "0/1", "0/1", "0/1", "6/1", "0/1", "0/1", "0/1", "0/1", "0/1", "0/1", "0/1", "-3/1", "0/1", "2/1", "0/1", "0/1", "0/1",
    "0/1", "0/1", "0/1", "0/1", "0/1", "0/1", "3/1", "0/1", "0/1", "0/1", "0/1", "0/1", "0/1", "0/1", "-3/1", "0/1", "2/1", "0/1", "0/1",
    "0/1", "0/1", "0/1", "0/1", "0/1", "0/1", "0/1", "3/1", "0/1", "0/1", "0/1", "0/1", "0/1", "0/1", "0/1", "-2/1", "0/1", "1/1", "0/1",
    "0/1", "0/1", "0/1", "0/1", "0/1", "0/1", "0/1", "0/1", "0/1", "3/1", "0/1", "0/1", "0/1", "0/1", "0/1", "0/1", "-2/1", "0/1", "0/1",
    "0/1", "0/1", "0/1", "0/1", "0/1", "0/1", "0/1", "0/1", "0/1", "0/1", "0/1", "3/1", "0/1", "0/1", "0/1", "0/1", "0/1", "-1/1", "0/1",
    "0/1", "0/1", "0/1", "0/1", "0/1", "0/1", "0/1", "0/1", "0/1", "0/1", "0/1", "0/1", "0/1", "3/1", "0/1", "0/1", "0/1", "0/1", "0/1",
};

const char* const kTernaryV1[19] = {"1/2100", "1/420", "3/700", "3/700", "1/350", "1/300", "3/175", "1/105", "1/50", "1/50", "1/140", "1/70", "3/50", "1/75", "4/175", "1/60", "1/50", "3/140", "1/25"};

const char* const kTernaryActivities[19] = {"9/1", "8/1", "7/1", "7/1", "6/1", "6/1", "6/1", "5/1", "5/1", "5/1", "4/1", "4/1", "4/1", "3/1", "3/1", "2/1", "2/1", "1/1", "0/1"};

const char* const kTernaryLeafCounts[19] = {"3/1", "3/1", "3/1", "2/1", "3/1", "2/1", "2/1", "2/1", "2/1", "1/1", "2/1", "1/1", "1/1", "1/1", "1/1", "1/1", "0/1", "0/1", "0/1"};

const char* const kTernaryPI[19 * 19] = {
    "697/700", "-2/525", "-1/300", "-1/300", "-1/350", "-1/350", "-1/350", "-1/420", "-1/420", "-1/420", "-1/525", "-1/525", "-1/525", "-1/700", "-1/700", "-1/1050", "-1/1050", "-1/2100", "0/1",
    "-3/140", "103/105", "-1/60", "-1/60", "-1/70", "-1/70", "-1/70", "-1/84", "-1/84", "-1/84", "-1/105", "-1/105", "-1/105", "-1/140", "-1/140", "-1/210", "-1/210", "-1/420", "0/1",
    "-27/700", "-6/175", "97/100", "-3/100", "-9/350", "-9/350", "-9/350", "-3/140", "-3/140", "-3/140", "-3/175", "-3/175", "-3/175", "-9/700", "-9/700", "-3/350", "-3/350", "-3/700", "0/1",
    "-27/700", "-6/175", "-3/100", "97/100", "-9/350", "-9/350", "-9/350", "-3/140", "-3/140", "-3/140", "-3/175", "-3/175", "-3/175", "-9/700", "-9/700", "-3/350", "-3/350", "-3/700", "0/1",
    "-9/350", "-4/175", "-1/50", "-1/50", "172/175", "-3/175", "-3/175", "-1/70", "-1/70", "-1/70", "-2/175", "-2/175", "-2/175", "-3/350", "-3/350", "-1/175", "-1/175", "-1/350", "0/1",
    "-3/100", "-2/75", "-7/300", "-7/300", "-1/50", "49/50", "-1/50", "-1/60", "-1/60", "-1/60", "-1/75", "-1/75", "-1/75", "-1/100", "-1/100", "-1/150", "-1/150", "-1/300", "0/1",
    "-27/175", "-24/175", "-3/25", "-3/25", "-18/175", "-18/175", "157/175", "-3/35", "-3/35", "-3/35", "-12/175", "-12/175", "-12/175", "-9/175", "-9/175", "-6/175", "-6/175", "-3/175", "0/1",
    "-3/35", "-8/105", "-1/15", "-1/15", "-2/35", "-2/35", "-2/35", "20/21", "-1/21", "-1/21", "-4/105", "-4/105", "-4/105", "-1/35", "-1/35", "-2/105", "-2/105", "-1/105", "0/1",
    "-9/50", "-4/25", "-7/50", "-7/50", "-3/25", "-3/25", "-3/25", "-1/10", "9/10", "-1/10", "-2/25", "-2/25", "-2/25", "-3/50", "-3/50", "-1/25", "-1/25", "-1/50", "0/1",
    "-9/50", "-4/25", "-7/50", "-7/50", "-3/25", "-3/25", "-3/25", "-1/10", "-1/10", "9/10", "-2/25", "-2/25", "-2/25", "-3/50", "-3/50", "-1/25", "-1/25", "-1/50", "0/1",
    "-9/140", "-2/35", "-1/20", "-1/20", "-3/70", "-3/70", "-3/70", "-1/28", "-1/28", "-1/28", "34/35", "-1/35", "-1/35", "-3/140", "-3/140", "-1/70", "-1/70", "-1/140", "0/1",
    "-9/70", "-4/35", "-1/10", "-1/10", "-3/35", "-3/35", "-3/35", "-1/14", "-1/14", "-1/14", "-2/35", "33/35", "-2/35", "-3/70", "-3/70", "-1/35", "-1/35", "-1/70", "0/1",
    "-27/50", "-12/25", "-21/50", "-21/50", "-9/25", "-9/25", "-9/25", "-3/10", "-3/10", "-3/10", "-6/25", "-6/25", "19/25", "-9/50", "-9/50", "-3/25", "-3/25", "-3/50", "0/1",
    "-3/25", "-8/75", "-7/75", "-7/75", "-2/25", "-2/25", "-2/25", "-1/15", "-1/15", "-1/15", "-4/75", "-4/75", "-4/75", "24/25", "-1/25", "-2/75", "-2/75", "-1/75", "0/1",
    "-36/175", "-32/175", "-4/25", "-4/25", "-24/175", "-24/175", "-24/175", "-4/35", "-4/35", "-4/35", "-16/175", "-16/175", "-16/175", "-12/175", "163/175", "-8/175", "-8/175", "-4/175", "0/1",
    "-3/20", "-2/15", "-7/60", "-7/60", "-1/10", "-1/10", "-1/10", "-1/12", "-1/12", "-1/12", "-1/15", "-1/15", "-1/15", "-1/20", "-1/20", "29/30", "-1/30", "-1/60", "0/1",
    "-9/50", "-4/25", "-7/50", "-7/50", "-3/25", "-3/25", "-3/25", "-1/10", "-1/10", "-1/10", "-2/25", "-2/25", "-2/25", "-3/50", "-3/50", "-1/25", "24/25", "-1/50", "0/1",
    "-27/140", "-6/35", "-3/20", "-3/20", "-9/70", "-9/70", "-9/70", "-3/28", "-3/28", "-3/28", "-3/35", "-3/35", "-3/35", "-9/140", "-9/140", "-3/70", "-3/70", "137/140", "0/1",
    "-9/25", "-8/25", "-7/25", "-7/25", "-6/25", "-6/25", "-6/25", "-1/5", "-1/5", "-1/5", "-4/25", "-4/25", "-4/25", "-3/25", "-3/25", "-2/25", "-2/25", "-1/25", "1/1",
};

const char* const kTernaryB[19 * 19] = {
    "19/2100", "-1/210", "0/1", "0/1", "0/1", "-3/700", "0/1", "0/1", "0/1", "0/1", "0/1", "0/1", "-3/700", "0/1", "0/1", "0/1", "0/1", "0/1", "0/1",
    "-1/210", "17/420", "-3/175", "-3/700", "0/1", "0/1", "0/1", "-1/70", "0/1", "0/1", "0/1", "0/1", "-1/70", "0/1", "0/1", "0/1", "0/1", "0/1", "0/1",
    "0/1", "-3/175", "9/140", "0/1", "-3/175", "0/1", "-3/175", "0/1", "0/1", "0/1", "-9/700", "0/1", "-9/700", "0/1", "0/1", "0/1", "0/1", "0/1", "0/1",
    "0/1", "-3/700", "0/1", "9/140", "0/1", "0/1", "-6/175", "0/1", "0/1", "0/1", "0/1", "-9/350", "-9/350", "0/1", "0/1", "0/1", "0/1", "0/1", "0/1",
    "0/1", "0/1", "-3/175", "0/1", "13/350", "0/1", "0/1", "0/1", "-1/50", "0/1", "0/1", "0/1", "0/1", "0/1", "0/1", "0/1", "0/1", "0/1", "0/1",
    "-3/700", "0/1", "0/1", "0/1", "0/1", "13/300", "0/1", "-2/105", "0/1", "0/1", "0/1", "0/1", "-11/700", "-1/50", "0/1", "0/1", "0/1", "0/1", "0/1",
    "0/1", "0/1", "-3/175", "-6/175", "0/1", "0/1", "39/175", "0/1", "-2/25", "-1/25", "0/1", "0/1", "-9/175", "0/1", "-9/175", "0/1", "0/1", "0/1", "0/1",
    "0/1", "-1/70", "0/1", "0/1", "0/1", "-2/105", "0/1", "11/105", "0/1", "0/1", "-1/35", "-1/70", "-1/70", "0/1", "0/1", "-1/35", "0/1", "0/1", "0/1",
    "0/1", "0/1", "0/1", "0/1", "-1/50", "0/1", "-2/25", "0/1", "11/50", "0/1", "0/1", "0/1", "-3/25", "0/1", "0/1", "0/1", "0/1", "0/1", "0/1",
    "0/1", "0/1", "0/1", "0/1", "0/1", "0/1", "-1/25", "0/1", "0/1", "11/50", "0/1", "0/1", "-9/50", "0/1", "0/1", "0/1", "-3/50", "0/1", "0/1",
    "0/1", "0/1", "-9/700", "0/1", "0/1", "0/1", "0/1", "-1/35", "0/1", "0/1", "9/140", "0/1", "9/700", "0/1", "-4/175", "0/1", "0/1", "0/1", "0/1",
    "0/1", "0/1", "0/1", "-9/350", "0/1", "0/1", "0/1", "-1/70", "0/1", "0/1", "0/1", "9/70", "-3/175", "0/1", "-8/175", "0/1", "0/1", "-3/70", "0/1",
    "-3/700", "-1/70", "-9/700", "-9/350", "0/1", "-11/700", "-9/175", "-1/70", "-3/25", "-9/50", "9/700", "-3/175", "27/50", "-1/50", "9/175", "1/35", "3/50", "3/70", "1/25",
    "0/1", "0/1", "0/1", "0/1", "0/1", "-1/50", "0/1", "0/1", "0/1", "0/1", "0/1", "0/1", "-1/50", "7/75", "0/1", "-1/30", "0/1", "0/1", "-1/25",
    "0/1", "0/1", "0/1", "0/1", "0/1", "0/1", "-9/175", "0/1", "0/1", "0/1", "-4/175", "-8/175", "9/175", "0/1", "4/25", "0/1", "-1/25", "0/1", "0/1",
    "0/1", "0/1", "0/1", "0/1", "0/1", "0/1", "0/1", "-1/35", "0/1", "0/1", "0/1", "0/1", "1/35", "-1/30", "0/1", "1/12", "0/1", "-3/140", "0/1",
    "0/1", "0/1", "0/1", "0/1", "0/1", "0/1", "0/1", "0/1", "0/1", "-3/50", "0/1", "0/1", "3/50", "0/1", "-1/25", "0/1", "1/10", "0/1", "0/1",
    "0/1", "0/1", "0/1", "0/1", "0/1", "0/1", "0/1", "0/1", "0/1", "0/1", "0/1", "-3/70", "3/70", "0/1", "0/1", "-3/140", "0/1", "9/140", "0/1",
    "0/1", "0/1", "0/1", "0/1", "0/1", "0/1", "0/1", "0/1", "0/1", "0/1", "0/1", "0/1", "1/25", "-1/25", "0/1", "0/1", "0/1", "0/1", "1/25",
};

const char* const kTernarySigmaScaled[19 * 19] = {
    "41376542411/41611670100", "-23408479/876035160", "-24963443/547521975", "-24963443/547521975", "-338777/11711700", "-288002937/9247037800", "-338777/1951950", "-61814939/730029300", "-2497361/12882870", "-2497361/12882870", "-6678998/109504395", "-13357996/109504395", "-72324583/128828700", "-720772978/10402917525", "-291188/1533675", "-343662071/4380175800", "-7052429/42942900", "-10190867/109504395", "-68043227/3963016200",
    "-23408479/876035160", "106759904/21900879", "-10916617/51531480", "-10916617/51531480", "-244879/1840410", "-1337363/9733724", "-244879/306735", "-53606911/146005860", "-3248263/3680820", "-3248263/3680820", "-2680231/10306296", "-2680231/5153148", "-465730/184041", "-59525563/219008790", "-3427337/4294290", "-126531917/438017580", "-1469917/2147145", "-3279013/10306296", "3706671/97337240",
    "-24963443/547521975", "-10916617/51531480", "12239749/1415700", "-501551/1415700", "-2178359/9909900", "-312293407/1460058600", "-2178359/1651650", "-3411301/6134700", "-20368/14157", "-20368/14157", "-757667/1981980", "-757667/990990", "-443321/108900", "-196315124/547521975", "-941257/825825", "-86297573/257657400", "-3159973/3303300", "-85739/283140", "56654959/208579800",
    "-24963443/547521975", "-10916617/51531480", "-501551/1415700", "12239749/1415700", "-2178359/9909900", "-312293407/1460058600", "-2178359/1651650", "-3411301/6134700", "-20368/14157", "-20368/14157", "-757667/1981980", "-757667/990990", "-443321/108900", "-196315124/547521975", "-941257/825825", "-86297573/257657400", "-3159973/3303300", "-85739/283140", "56654959/208579800",
    "-338777/11711700", "-244879/1840410", "-2178359/9909900", "-2178359/9909900", "1162547/198198", "-1290076/10735725", "-26641/33033", "-3201412/10735725", "-94213/108900", "-94213/108900", "-76651/396396", "-76651/198198", "-65447/27225", "-456479/2927925", "-889403/1651650", "-3296674/32207175", "-26839/63525", "-39443/1981980", "6456887/21471450",
    "-288002937/9247037800", "-1337363/9733724", "-312293407/1460058600", "-312293407/1460058600", "-1290076/10735725", "1341943367/198150810", "-2580152/3578575", "-433585133/730029300", "-29434157/42942900", "-29434157/42942900", "-117464953/292011720", "-117464953/146005860", "-34515419/21471450", "-366941303/495377025", "-8194161/7157150", "-676938/790075", "-1247859/1431430", "-59455463/58402344", "-3567263197/3963016200",
    "-338777/1951950", "-244879/306735", "-2178359/1651650", "-2178359/1651650", "-26641/33033", "-2580152/3578575", "343114/11011", "-6402824/3578575", "-94213/18150", "-94213/18150", "-76651/66066", "-76651/33033", "-130894/9075", "-912958/975975", "-889403/275275", "-6593348/10735725", "-53678/21175", "-39443/330330", "6456887/3578575",
    "-61814939/730029300", "-53606911/146005860", "-3411301/6134700", "-3411301/6134700", "-3201412/10735725", "-433585133/730029300", "-6402824/3578575", "96310504/5214495", "-33553843/21471450", "-33553843/21471450", "-8757649/8588580", "-8757649/4294290", "-33159457/10735725", "-109833091/60835775", "-10151767/3578575", "-298480453/146005860", "-7463983/3578575", "-2909761/1226940", "-95014589/52144950",
    "-2497361/12882870", "-3248263/3680820", "-20368/14157", "-20368/14157", "-94213/108900", "-29434157/42942900", "-94213/18150", "-33553843/21471450", "90452/2475", "-13498/2475", "-439141/495495", "-878282/495495", "-13309/900", "-712856/1288287", "-25198/12705", "12017233/128828700", "-25111/23100", "559703/495495", "12078779/4294290",
    "-2497361/12882870", "-3248263/3680820", "-20368/14157", "-20368/14157", "-94213/108900", "-29434157/42942900", "-94213/18150", "-33553843/21471450", "-13498/2475", "90452/2475", "-439141/495495", "-878282/495495", "-13309/900", "-712856/1288287", "-25198/12705", "12017233/128828700", "-25111/23100", "559703/495495", "12078779/4294290",
    "-6678998/109504395", "-2680231/10306296", "-757667/1981980", "-757667/1981980", "-76651/396396", "-117464953/292011720", "-76651/66066", "-8757649/8588580", "-439141/495495", "-439141/495495", "5682427/396396", "-263513/198198", "-172523/152460", "-122261819/109504395", "-295822/165165", "-519971/425880", "-824749/660660", "-538127/396396", "-240667397/292011720",
    "-13357996/109504395", "-2680231/5153148", "-757667/990990", "-757667/990990", "-76651/198198", "-117464953/146005860", "-76651/33033", "-8757649/4294290", "-878282/495495", "-878282/495495", "-263513/198198", "2709457/99099", "-172523/76230", "-244523638/109504395", "-591644/165165", "-519971/212940", "-824749/330330", "-538127/198198", "-240667397/146005860",
    "-72324583/128828700", "-465730/184041", "-443321/108900", "-443321/108900", "-65447/27225", "-34515419/21471450", "-130894/9075", "-33159457/10735725", "-13309/900", "-13309/900", "-172523/152460", "-172523/76230", "39227/450", "-7955746/32207175", "54421/127050", "161191087/64414350", "893/210", "215345/30492", "217039103/21471450",
    "-720772978/10402917525", "-59525563/219008790", "-196315124/547521975", "-196315124/547521975", "-456479/2927925", "-366941303/495377025", "-912958/975975", "-109833091/60835775", "-712856/1288287", "-712856/1288287", "-122261819/109504395", "-244523638/109504395", "-7955746/32207175", "36088849118/1486131075", "-30069938/10735725", "-655132571/156434850", "-19005188/10735725", "-522952526/109504395", "-4662351652/495377025",
    "-291188/1533675", "-3427337/4294290", "-941257/825825", "-941257/825825", "-889403/1651650", "-8194161/7157150", "-889403/275275", "-10151767/3578575", "-25198/12705", "-25198/12705", "-295822/165165", "-591644/165165", "54421/127050", "-30069938/10735725", "11949972/275275", "-61733263/21471450", "-123237/42350", "-483403/165165", "-3529243/3578575",
    "-343662071/4380175800", "-126531917/438017580", "-86297573/257657400", "-86297573/257657400", "-3296674/32207175", "-676938/790075", "-6593348/10735725", "-298480453/146005860", "12017233/128828700", "12017233/128828700", "-519971/425880", "-519971/212940", "161191087/64414350", "-655132571/156434850", "-61733263/21471450", "949120823/31286970", "-34044067/21471450", "-269791793/51531480", "-694478313/69526600",
    "-7052429/42942900", "-1469917/2147145", "-3159973/3303300", "-3159973/3303300", "-26839/63525", "-1247859/1431430", "-53678/21175", "-7463983/3578575", "-25111/23100", "-25111/23100", "-824749/660660", "-824749/330330", "893/210", "-19005188/10735725", "-123237/42350", "-34044067/21471450", "156031/3850", "-826069/660660", "3453169/7157150",
    "-10190867/109504395", "-3279013/10306296", "-85739/283140", "-85739/283140", "-39443/1981980", "-59455463/58402344", "-39443/330330", "-2909761/1226940", "559703/495495", "559703/495495", "-538127/396396", "-538127/198198", "215345/30492", "-522952526/109504395", "-483403/165165", "-269791793/51531480", "-826069/660660", "2222557/56628", "-439517549/41715960",
    "-68043227/3963016200", "3706671/97337240", "56654959/208579800", "56654959/208579800", "6456887/21471450", "-3567263197/3963016200", "6456887/3578575", "-95014589/52144950", "12078779/4294290", "12078779/4294290", "-240667397/292011720", "-240667397/146005860", "217039103/21471450", "-4662351652/495377025", "-3529243/3578575", "-694478313/69526600", "3453169/7157150", "-439517549/41715960", "3991031128/165125675",
};

const char* const kTernarySigmaScale = "1/2100";

const char* const kTernarySigmaP[3 * 3] = {
    "156031/8085000", "-826069/1387386000", "3453169/15030015000",
    "-826069/1387386000", "2222557/118918800", "-439517549/87603516000",
    "3453169/15030015000", "-439517549/87603516000", "142536826/12384425625",
};

const char* const kLeafGapA3[3 * 3] = {
    "-1/1", "0/1", "2/1",
    "2/1", "-2/1", "2/1",
    "0/1", "3/1", "-3/1",
};

const char* const kLeafGapSigma3[3 * 3] = {
    "479/2100", "-7/150", "-127/700",
    "-7/150", "32/75", "-19/50",
    "-127/700", "-19/50", "393/700",
};

const char* const kLeafGapV1[3] = {"3/10", "2/5", "3/10"};

const char* const kOneProtSigma2[3 * 3] = {
    "8/45", "-4/45", "4/45",
    "-4/45", "2/45", "-2/45",
    "4/45", "-2/45", "2/45",
};

const char* const kOneProtSigma3[4 * 4] = {
    "479/2100", "-7/300", "-127/2100", "101/1400",
    "-7/300", "8/75", "-19/300", "1/100",
    "-127/2100", "-19/300", "131/2100", "-43/1400",
    "101/1400", "1/100", "-43/1400", "9/350",
};

}  // namespace polyurn::refdata
