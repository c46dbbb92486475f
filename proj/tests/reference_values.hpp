// Generated by tests/oracles/gen_reference.py (mpmath, 40 digits). Do not edit.
#pragma once

#include <array>

namespace casimir::reference {

struct BesselSample {
  double nu;
  double x;
  double j;
  double y;
};

inline constexpr std::array<BesselSample, 408> kBessel{{
    {0.0, 0.01000000000000000020816682, 0.9999750001562495659718596, -3.005455637083645944523087},
    {0.0, 0.1000000000000000055511151, 0.9975015620660400320040779, -1.534238651350366808268018},
    {0.0, 0.5, 0.9384698072408129042284047, -0.4445187335067065571483985},
    {0.0, 1.0, 0.7651976865579665514497175, 0.08825696421567695798292677},
    {0.0, 1.5, 0.5118276717359181287490517, 0.3824489237977588439550686},
    {0.0, 1.989999999999999991118216, 0.2296611840455894359837454, 0.5092771201920098194659352},
    {0.0, 2.0, 0.2238907791412356680518275, 0.5103756726497451195966066},
    {0.0, 2.009999999999999786837179, 0.2181268213258489063175488, 0.5114178360472611852846154},
    {0.0, 3.700000000000000177635684, -0.3992302033711911153289619, 0.1060743153203541102676022},
    {0.0, 5.0, -0.177596771314338304347397, -0.308517625249033780073649},
    {0.0, 10.0, -0.2459357644513483351977609, 0.05567116728359939142445988},
    {0.0, 17.30000000000000071054274, -0.1337006470757641944548515, -0.1375052134435249642848127},
    {0.0, 24.89999999999999857891453, 0.08324596835301549005270425, -0.136499183996765235375824},
    {0.0, 25.0, 0.09626678327595811617350334, -0.1272494322680061378343287},
    {0.0, 25.10000000000000142108547, 0.1082756714999494519768852, -0.1167677076380369472030394},
    {0.0, 30.0, -0.08636798358104021133596232, -0.1172957316866640252512479},
    {0.0, 41.5, -0.1228203242138017711147244, 0.01594650871400803110022648},
    {0.0, 50.0, 0.05581232766925181500475048, -0.09806499547007707902921145},
    {0.0, 63.20000000000000284217094, 0.09167210877161770971114762, -0.04085348249749758920189501},
    {0.0, 100.0, 0.01998585030422312242422839, -0.07724431336508315225422822},
    {0.0, 120.5, 0.06869106112012379694719368, 0.0237622449378455146231153},
    {0.0, 300.0, -0.03329855487630566800748309, -0.03183188973000339801484418},
    {0.0, 777.7000000000000454747351, -0.01685006056415001110584997, -0.02312289525565013700098893},
    {0.0, 1000.0, 0.02478668615242017456133073, 0.004715917977622813399773261},
    {1.0, 0.01000000000000000020816682, 0.004999937500260416228212128, -63.67859628206065504934519},
    {1.0, 0.1000000000000000055511151, 0.049937526036242000321493, -6.458951094702026637674977},
    {1.0, 0.5, 0.2422684576748738863839546, -1.471472392670243069188585},
    {1.0, 1.0, 0.4400505857449335159596822, -0.78121282130028871654715},
    {1.0, 1.5, 0.5579365079100996419901212, -0.4123086269739112959528298},
    {1.0, 1.989999999999999991118216, 0.5773494940468115362481574, -0.1126814084217741016621837},
    {1.0, 2.0, 0.5767248077568733872024482, -0.1070324315409375468883708},
    {1.0, 2.009999999999999786837179, 0.5760600909547547673375454, -0.1014036221017179900397354},
    {1.0, 3.700000000000000177635684, 0.05383398774546179051314674, 0.4166743726838074932859054},
    {1.0, 5.0, -0.3275791375914652220377343, 0.1478631433912268448010507},
    {1.0, 10.0, 0.04347274616886143666974877, 0.2490154242069538839232835},
    {1.0, 17.30000000000000071054274, -0.1414233354920139860795537, 0.1297853467390838927387429},
    {1.0, 24.89999999999999857891453, -0.1348556995314088693339668, -0.08600255759555425247880473},
    {1.0, 25.0, -0.1253502495802899046518093, -0.09882996478323741005333031},
    {1.0, 25.10000000000000142108547, -0.1146347841344225674587364, -0.1106222332278309881104788},
    {1.0, 30.0, -0.1187510626166229365202343, 0.0844255706617472348909229},
    {1.0, 41.5, 0.01446811651145212113785635, 0.1230213291605513680970232},
    {1.0, 50.0, -0.09751182812517513766145895, -0.05679566856201476794181955},
    {1.0, 63.20000000000000284217094, -0.04012955184220336342918558, -0.09199816425339229785895826},
    {1.0, 100.0, -0.07714535201411215803268549, -0.02037231200275979330470393},
    {1.0, 120.5, 0.02404746972070039185294981, -0.06859305556551055318805291},
    {1.0, 300.0, -0.03188743137749995031400127, 0.03324554812131021605596385},
    {1.0, 777.7000000000000454747351, -0.02313373329517858367422123, 0.01683519784775594263064007},
    {1.0, 1000.0, 0.004728311907089523917576072, -0.02478433129235177891486236},
    {2.0, 0.01000000000000000020816682, 1.249989583365885414454088e-5, -12732.7138007750470988091},
    {2.0, 0.1000000000000000055511151, 0.00124895865879991898399084, -127.6447832426901587743553},
    {2.0, 0.5, 0.03060402345868264130741363, -5.44137083717426571960594},
    {2.0, 1.0, 0.1149034849319004804696469, -1.650682606816254391077227},
    {2.0, 1.5, 0.2320876721442147272377765, -0.9321937597629739052255083},
    {2.0, 1.989999999999999991118216, 0.3505895637401508040413685, -0.6225247668470591683755878},
    {2.0, 2.0, 0.3528340286156377191506208, -0.6174081041906826664849774},
    {2.0, 2.009999999999999786837179, 0.3550672990271409727166633, -0.6123169625166323303529802},
    {2.0, 3.700000000000000177635684, 0.4283296562065758655606355, 0.1191550753195418212359205},
    {2.0, 5.0, 0.04656511627775221553230328, 0.3676628826055245179940693},
    {2.0, 10.0, 0.2546303136851206225317106, -0.005868082442208614639803182},
    {2.0, 17.30000000000000071054274, 0.1173511285217741389321881, 0.1525092997717427547366301},
    {2.0, 24.89999999999999857891453, -0.09407775144790776933225538, 0.1295913480453150942202322},
    {2.0, 25.0, -0.1062948032423813085456481, 0.1193430350853471450300622},
    {2.0, 25.10000000000000142108547, -0.1174099172477122058389142, 0.1079531870621141598048414},
    {2.0, 30.0, 0.07845124607326534890128004, 0.1229241030641138409106427},
    {2.0, 41.5, 0.1235175828408597046635367, -0.01001776995928266396302054},
    {2.0, 50.0, -0.05971280079425882051120884, 0.09579316872759648831153867},
    {2.0, 63.20000000000000284217094, -0.09294203129826971482584753, 0.03794214818568137737525883},
    {2.0, 100.0, -0.0215287573445053655848821, 0.07683686712502795638813414},
    {2.0, 120.5, -0.06829193299197939210316132, -0.02490071888914029558889211},
    {2.0, 300.0, 0.03308597200045566833872309, 0.03205352671747879945521727},
    {2.0, 777.7000000000000454747351, 0.01679056787212177764224829, 0.02316619009388533294195904},
    {2.0, 1000.0, -0.02477722952860599551349558, -0.004765486640207516957602986},
    {3.0, 0.01000000000000000020816682, 2.083320312532552168225052e-8, -5.09302184171373667284745e+6},
    {3.0, 0.1000000000000000055511151, 2.082031575475626489529303e-5, -5099.332378612904040908183},
    {3.0, 0.5, 0.002563729994587244075354472, -42.05949430472388268765894},
    {3.0, 1.0, 0.01956335398266840591890532, -5.821517605964728847761757},
    {3.0, 1.5, 0.06096395114113963064394956, -2.073541399060685784648526},
    {3.0, 1.989999999999999991118216, 0.1273531466369086760254561, -1.138624655592415187089666},
    {3.0, 2.0, 0.1289432494744020510987933, -1.127783776840427786081584},
    {3.0, 2.009999999999999786837179, 0.1305414991490084373827736, -1.117137596836853940885441},
    {3.0, 3.700000000000000177635684, 0.4092251000454310148886706, -0.2878580750410595846206863},
    {3.0, 5.0, 0.3648312306136669944635769, 0.1462671626931927695942047},
    {3.0, 10.0, 0.05837937930518681234293548, -0.2513626571838373297792047},
    {3.0, 17.30000000000000071054274, 0.1685565443987825720014871, -0.0945230808959063786409872},
    {3.0, 24.89999999999999857891453, 0.1197428077325481826349414, 0.1068204448317494495255889},
    {3.0, 25.0, 0.1083430810615088952845056, 0.1179248503968929532581403},
    {3.0, 25.10000000000000142108547, 0.09592404034992659946008735, 0.1278259283771718890973889},
    {3.0, 30.0, 0.1292112287597249830404049, -0.06803569025319872276950387},
    {3.0, 41.5, -0.002562807321971667676310639, -0.1239868973493978899247842},
    {3.0, 50.0, 0.09273480406163443202056225, 0.06445912206022248700674264},
    {3.0, 63.20000000000000284217094, 0.03424714479800907794525229, 0.0943995660372961823949684},
    {3.0, 100.0, 0.07628420172033194340929021, 0.0234457866877609115602293},
    {3.0, 120.5, -0.02631442185321423059496346, 0.06776647568537311599008139},
    {3.0, 300.0, 0.03232857767083935922518425, -0.03281816776507716539656095},
    {3.0, 777.7000000000000454747351, 0.02322009342310514546751143, -0.0167160455263266751414419},
    {3.0, 1000.0, -0.004827420825203947899630054, 0.02476526934579094884703194},
    {5.0, 0.01000000000000000020816682, 2.60415581599159871316698e-14, -2.444635204829711167413614e+12},
    {5.0, 0.1000000000000000055511151, 2.60308179096444155640458e-9, -2.446148450230390856271309e+7},
    {5.0, 0.5, 8.053627241357474085978185e-6, -7946.301478807473341829162},
    {5.0, 1.0, 0.0002497577302112344313750655, -260.4058666258122207161848},
    {5.0, 1.5, 0.00179942176736061115883284, -37.19030839549808345998398},
    {5.0, 1.989999999999999991118216, 0.006877095990402674329122307, -10.15992567905336331936113},
    {5.0, 2.0, 0.007039629755871685484243512, -9.935989128481974980957514},
    {5.0, 2.009999999999999786837179, 0.007205039500029674699445904, -9.718373378362163811080556},
    {5.0, 3.700000000000000177635684, 0.09948541700833390963041534, -0.9790650682335420570396583},
    {5.0, 5.0, 0.2611405461201700900548055, -0.4536948224911018807638425},
    {5.0, 10.0, -0.2340615281867936404436949, 0.135403047689362303197029},
    {5.0, 17.30000000000000071054274, -0.1957899369487240246717416, 0.008838978615801122231794442},
    {5.0, 24.89999999999999857891453, -0.08024676273394244701283916, -0.1401863827661421110624484},
    {5.0, 25.0, -0.06600799539842299339204816, -0.147057993113722660857535},
    {5.0, 25.10000000000000142108547, -0.05119417047462765841094053, -0.1524943549100337041155867},
    {5.0, 30.0, -0.143240295512077076985258, 0.03162735928926443331229227},
    {5.0, 41.5, -0.02131923782514406000361801, 0.1224624546457896714427596},
    {5.0, 50.0, -0.08140024769656963964397404, -0.07854841391308165338605937},
    {5.0, 63.20000000000000284217094, -0.02207077232797482830171285, -0.09806794123580460632312787},
    {5.0, 100.0, -0.07419573696451392083413505, -0.02948019628166189569579093},
    {5.0, 120.5, 0.03076133779166665744153217, -0.0658892983749253513499949},
    {5.0, 300.0, -0.0331936283494270627226301, 0.03194590402980302292287699},
    {5.0, 777.7000000000000454747351, -0.02339097086708311739159208, 0.01647641425111398957268636},
    {5.0, 1000.0, 0.005025406945233186074238837, -0.02472595671974069074582646},
    {10.0, 0.01000000000000000020816682, 2.691138339236344981301841e-30, -1.182808190517663198936538e+28},
    {10.0, 0.1000000000000000055511151, 2.690532895434217072970508e-20, -1.183133513204519131755501e+18},
    {10.0, 0.5, 2.613177360822803086243615e-13, -1.219636233495696305346402e+11},
    {10.0, 1.0, 2.630615123687453206997854e-10, -1.216180142786891892881304e+8},
    {10.0, 1.5, 1.474326907804000038892731e-8, -2.183993026086405657639914e+6},
    {10.0, 1.989999999999999991118216, 2.394596439780688448235074e-7, -1.356724063438685852143261e+5},
    {10.0, 2.0, 2.515386282716736709635161e-7, -1.291845422080392826359131e+5},
    {10.0, 2.009999999999999786837179, 2.641596308435907174593675e-7, -1.230383977940448404718547e+5},
    {10.0, 3.700000000000000177635684, 9.441028200787226755085502e-5, -363.3270678652323066026175},
    {10.0, 5.0, 0.001467802647310474131107532, -25.12911009561009673737955},
    {10.0, 10.0, 0.2074861066333588576972787, -0.3598141521834027220519866},
    {10.0, 17.30000000000000071054274, -0.1714120303592960095560651, -0.1247968320244585788804084},
    {10.0, 24.89999999999999857891453, -0.08868880155802567646450513, -0.1415490853138295767648447},
    {10.0, 25.0, -0.07517984394852328384132298, -0.1487183904998064975723111},
    {10.0, 25.10000000000000142108547, -0.06109503451421171790443289, -0.1546131928002861051099425},
    {10.0, 30.0, -0.1298768939985887681859474, 0.07505670212239711328867641},
    {10.0, 41.5, 0.05911665745344037516602708, 0.1109482109121245184857294},
    {10.0, 50.0, -0.1138478491494693856669042, 0.005723897182053513545981926},
    {10.0, 63.20000000000000284217094, -0.0940391009398814841600941, -0.03684942190607941467447593},
    {10.0, 100.0, -0.05473217693547201474191746, 0.0583315742364149287538281},
    {10.0, 120.5, -0.05336376899881159928132741, -0.04953482403140223908972428},
    {10.0, 300.0, 0.02756348389069124397484994, 0.03692556297004350830684069},
    {10.0, 777.7000000000000454747351, 0.01533026500871823944525107, 0.02415871440527343662500824},
    {10.0, 1000.0, -0.02452062230603655819198016, -0.005949000574162668580842062},
    {20.0, 0.01000000000000000020816682, 3.919899683074646919466706e-65, -4.060179491922389887372555e+62},
    {20.0, 0.1000000000000000055511151, 3.91943772085862200868342e-45, -4.06070842012636771009655e+42},
    {20.0, 0.5, 3.727201961704714460651626e-31, -4.271430121565906436131048e+28},
    {20.0, 1.0, 3.873503008524657718914788e-25, -4.113970314835505280106726e+22},
    {20.0, 1.5, 1.268997218933256003203265e-21, -1.257730177296424387711628e+19},
    {20.0, 1.989999999999999991118216, 3.54683185820480373876287e-19, -4.509678920936778977837681e+16},
    {20.0, 2.0, 3.918972805090753839086581e-19, -4.081651388998366625321103e+16},
    {20.0, 2.009999999999999786837179, 4.327984613362172428311721e-19, -3.696106692324762275083608e+16},
    {20.0, 3.700000000000000177635684, 7.696009826743045713703829e-14, -2.104444209060717821317042e+11},
    {20.0, 5.0, 2.770330052128941687394019e-11, -5.933965296914320692145736e+8},
    {20.0, 10.0, 1.151336924781339778329528e-5, -1597.483848269625981047228},
    {20.0, 17.30000000000000071054274, 0.04411777809762815192175629, -0.7472363309470509351998821},
    {20.0, 24.89999999999999857891453, 0.06422099357756960760953249, 0.195566758608605467174853},
    {20.0, 25.0, 0.05199404922830323177972328, 0.1980407477628924361078819},
    {20.0, 25.10000000000000142108547, 0.03962927249491715737029059, 0.1997935382606892412046205},
    {20.0, 30.0, 0.004831019993404064538562355, -0.1684815394874267669430119},
    {20.0, 41.5, -0.01006750462669234899894021, 0.1319118413162967593080164},
    {20.0, 50.0, -0.1167043527595797373414582, 0.01644263394811577765001393},
    {20.0, 63.20000000000000284217094, -0.09608926714802265169778029, 0.03721616262041210998302512},
    {20.0, 100.0, 0.06221745849833875314069107, 0.05124797307618842421144694},
    {20.0, 120.5, -0.03023128038168305284730531, 0.06665938739935504051888884},
    {20.0, 300.0, -0.006481151688762768958585803, -0.04565948985005820560403788},
    {20.0, 777.7000000000000454747351, -0.01041612795901125332288311, -0.02665272835686506067323314},
    {20.0, 1000.0, 0.02335796793267933459107299, 0.009547376014987301681968636},
    {40.0, 0.01000000000000000020816682, 1.114691887597384723695116e-140, -7.138965925895529394961128e+137},
    {40.0, 0.1000000000000000055511151, 1.114624600251642287044074e-100, -7.139418990418096475811749e+97},
    {40.0, 0.5, 1.012262695900359412740677e-72, -7.861960484882533121087623e+69},
    {40.0, 1.0, 1.107915851128632662175021e-60, -7.18487479680138425615783e+57},
    {40.0, 1.5, 1.215755339137247329362004e-53, -6.550126999414625728909284e+50},
    {40.0, 1.989999999999999991118216, 9.790125456446607398907951e-49, -8.138424462266062188996129e+45},
    {40.0, 2.0, 1.196077458113680027085856e-48, -6.661541235527183356943251e+45},
    {40.0, 2.009999999999999786837179, 1.459807274323631727884801e-48, -5.45813108986052410456794e+45},
    {40.0, 3.700000000000000177635684, 5.481948496887589858706561e-38, -1.457881886945337089991168e+35},
    {40.0, 5.0, 8.702241617388818076805094e-33, -9.216816571649314232560177e+29},
    {40.0, 10.0, 6.030895312346906631743294e-21, -1.362803297269337395371755e+18},
    {40.0, 17.30000000000000071054274, 5.730087254660570581973321e-12, -1.540452381545926137283473e+9},
    {40.0, 24.89999999999999857891453, 1.475565224899079630213591e-6, -6895.021198980778674349144},
    {40.0, 25.0, 1.674577415562266045969709e-6, -6091.210259177988202443351},
    {40.0, 25.10000000000000142108547, 1.898893378899746243008603e-6, -5385.591351604256940060769},
    {40.0, 30.0, 0.0003612023608896585308901517, -33.39366890733031353838427},
    {40.0, 41.5, 0.1773309705997286880360101, -0.130428717726584487368176},
    {40.0, 50.0, -0.1381762812011614309660029, -0.04530801119560900793340745},
    {40.0, 63.20000000000000284217094, 0.112687977636750747097308, 0.01752458213070724228380459},
    {40.0, 100.0, 0.07270175482281105657734897, 0.04074685216880344160192263},
    {40.0, 120.5, 0.05467305376008948453085195, 0.05110272971759643148207572},
    {40.0, 300.0, 0.04431532933245365649911093, 0.01331661480055027906317688},
    {40.0, 777.7000000000000454747351, 0.01112688937477823785521701, -0.02637934935736697411111196},
    {40.0, 1000.0, 0.01388937803538504234476685, 0.02107640333192319449045046},
    {60.0, 0.01000000000000000020816682, 1.042377990448055985207796e-220, -5.089482790357833634490566e+217},
    {60.0, 0.1000000000000000055511151, 1.042335698086576131865735e-160, -5.089696294404652588005914e+157},
    {60.0, 0.5, 9.031932711389307279654188e-119, -5.873990880092268054474583e+115},
    {60.0, 1.0, 1.038114976564521331896412e-100, -5.111092775306671116904279e+97},
    {60.0, 1.5, 3.797483465120770768893156e-90, -1.397458059190849954828801e+87},
    {60.0, 1.989999999999999991118216, 8.753072156811071624566613e-83, -6.064254712635557801138477e+79},
    {60.0, 2.0, 1.182237218320969429943357e-82, -4.489890253793994188816142e+79},
    {60.0, 2.009999999999999786837179, 1.594398730787025235909177e-82, -3.329245606117378884107045e+79},
    {60.0, 3.700000000000000177635684, 1.218291034246150018145917e-66, -4.362901396920860366944192e+63},
    {60.0, 5.0, 8.160024038093517777090621e-59, -6.524107293782372722111165e+55},
    {60.0, 10.0, 6.909433249439961898106398e-41, -7.787095775015260940234509e+37},
    {60.0, 17.30000000000000071054274, 5.789956181161268988698685e-27, -9.569248032028009958345619e+23},
    {60.0, 24.89999999999999857891453, 4.597304305109675362531822e-18, -1.268406915164113768094614e+15},
    {60.0, 25.0, 5.723515483722270245814929e-18, -1.019678275738245996704809e+15},
    {60.0, 25.10000000000000142108547, 7.118112381894498768619341e-18, -8.205923069879018374204815e+14},
    {60.0, 30.0, 9.807557643128624630168429e-14, -6.246625104472867935297922e+10},
    {60.0, 41.5, 6.724866737360299220405963e-7, -10928.94246254540832195833},
    {60.0, 50.0, 0.001048519599531418051982732, -9.194397418995578025209826},
    {60.0, 63.20000000000000284217094, 0.1705899480024013440574415, -0.03051014196416224154008301},
    {60.0, 100.0, 0.001063156304227703081316379, -0.08919469415037777830721788},
    {60.0, 120.5, -0.0776327925906029997067151, 0.008059740766064083351945087},
    {60.0, 300.0, -0.04084340882273173036919689, -0.02230776680334423020771845},
    {60.0, 777.7000000000000454747351, 0.02846410878112629918068316, 0.003291576910006714950414197},
    {60.0, 1000.0, -0.01024585185079205553996986, 0.02308227088793817298009426},
    {0.5, 0.01000000000000000020816682, 0.07978712627933422048512865, -7.97844666907275996469703},
    {0.5, 0.1000000000000000055511151, 0.251892940326000952671563, -2.510527368958509243288378},
    {0.5, 0.5, 0.5409737899345280913309131, -0.990245880243404880023352},
    {0.5, 1.0, 0.671396707141803090416364, -0.431098868018376079520521},
    {0.5, 1.5, 0.6498380747537472704348623, -0.04608316589309741073885251},
    {0.5, 1.989999999999999991118216, 0.5166315012173878420448188, 0.2302201670149936595063307},
    {0.5, 2.0, 0.5130161365618277516656918, 0.2347857104062484691740347},
    {0.5, 2.009999999999999786837179, 0.5093708287403710798467477, 0.2393065267342118239092561},
    {0.5, 3.700000000000000177635684, -0.2197762598505278348580109, 0.3517922590724494684618511},
    {0.5, 5.0, -0.34216798479816180975967, -0.1012177091851083995650602},
    {0.5, 10.0, -0.1372637357550504812129588, 0.2117088663313981529189983},
    {0.5, 17.30000000000000071054274, -0.1917869424635648363682479, -0.004074245104290202822774876},
    {0.5, 24.89999999999999857891453, -0.03687956258717699908357435, -0.1555858508817773648441358},
    {0.5, 25.0, -0.02112028359965044501778374, -0.1581730840420505620348448},
    {0.5, 25.10000000000000142108547, -0.005213394369269952181391812, -0.1591733585235783608897795},
    {0.5, 30.0, -0.1439296533703998891357971, -0.02247029059883102482468335},
    {0.5, 41.5, -0.07586906915085391637885573, 0.0978985179914376764568588},
    {0.5, 50.0, -0.02960583188892461256802952, -0.1088847563505395431367208},
    {0.5, 63.20000000000000284217094, 0.03612000930745620241339478, -0.09363996257834197494871589},
    {0.5, 100.0, -0.04040213271625212374377295, -0.06880309146872808374611928},
    {0.5, 120.5, 0.06540756068356007510535304, -0.03170177665891370262797395},
    {0.5, 300.0, -0.04605463914475310565973835, 0.001017900357850776434291612},
    {0.5, 777.7000000000000454747351, -0.02826443775073360212707859, -0.004440107412619797023384713},
    {0.5, 1000.0, 0.020863266605093827730006, -0.01418956937092729432343414},
    {1.5, 0.01000000000000000020816682, 0.0002659588606619177255137211, -797.9244540335553140817096},
    {1.5, 0.1000000000000000055511151, 0.008402034301500143598580288, -25.3571666299110919919327},
    {1.5, 0.5, 0.09170169962565130263847431, -2.521465550421337851377617},
    {1.5, 1.0, 0.240297839123427010895843, -1.102495575160179169936885},
    {1.5, 1.5, 0.3871422172760674362177224, -0.680560185349145544260764},
    {1.5, 1.989999999999999991118216, 0.4898339867222237320443471, -0.4009429750792000729323308},
    {1.5, 2.0, 0.4912937786871623450068806, -0.3956232813587035170786745},
    {1.5, 2.009999999999999786837179, 0.4927248494906153730963766, -0.3903128552407631946288425},
    {1.5, 3.700000000000000177635684, 0.2923932699236581645951941, 0.3148552487890276866343433},
    {1.5, 5.0, -0.1696513061447407615169942, 0.321924442961140129846658},
    {1.5, 10.0, 0.1979824927558931047977024, 0.1584346223881902965048586},
    {1.5, 17.30000000000000071054274, -0.01516019553571013510550357, 0.1915514369662070211858526},
    {1.5, 24.89999999999999857891453, -0.1570669578129892926027043, 0.0306311348409208796569203},
    {1.5, 25.0, -0.1590178953860365798355561, 0.01479336023796842253638995},
    {1.5, 25.10000000000000142108547, -0.1593810634785293549888323, -0.001128173699398508052786246},
    {1.5, 30.0, -0.02726794571117768779587658, 0.1431806436837721883083077},
    {1.5, 41.5, 0.09607034765045324473688637, 0.07822806958438253508865956},
    {1.5, 50.0, -0.1094768729883180353880814, 0.0274281367619138217052951},
    {1.5, 63.20000000000000284217094, -0.09306844344373032620205387, -0.03760165428496161334278762},
    {1.5, 100.0, -0.06920711279589060498355701, 0.03971410180156484290631176},
    {1.5, 120.5, -0.03115897532544017503373866, -0.06567064596703653736782585},
    {1.5, 300.0, 0.0008643848940349327487591505, 0.04605803214594594158118599},
    {1.5, 777.7000000000000454747351, -0.004476451038376173004449856, 0.02825872847027504510410861},
    {1.5, 1000.0, -0.01416870610432220049570414, -0.02087745617446475502432944},
    {2.5, 0.01000000000000000020816682, 5.319192410955080734054563e-7, -2.393693577633975164815064e+5},
    {2.5, 0.1000000000000000055511151, 0.0001680887190033412936477713, -758.2044715283742082865273},
    {2.5, 0.5, 0.009236407819379724499932749, -14.13854742228462222824235},
    {2.5, 1.0, 0.04949681022847794227116512, -2.876387857462161430290134},
    {2.5, 1.5, 0.1244463597983876020005824, -1.315037204805193677782675},
    {2.5, 1.989999999999999991118216, 0.2218116948462660286545453, -0.8346568128630339731573197},
    {2.5, 2.0, 0.2239245314689157658446291, -0.8282206324443037447920464},
    {2.5, 2.009999999999999786837179, 0.2260393943799504505270072, -0.8218630270935599373748851},
    {2.5, 3.700000000000000177635684, 0.4568518841129533623370628, -0.09650421951377838344704992},
    {2.5, 5.0, 0.2403772011113173528494735, 0.294372374961792477473055},
    {2.5, 10.0, 0.1966584835818184126522695, -0.1641784796149410639675407},
    {2.5, 17.30000000000000071054274, 0.1891580068215341772093728, 0.03729125729496193923638477},
    {2.5, 24.89999999999999857891453, 0.01795583273019033624420284, 0.1592763490553822903146288},
    {2.5, 25.0, 0.002038136153326055437517005, 0.1599482872706067727392116},
    {2.5, 25.10000000000000142108547, -0.01383613513015586606145629, 0.1590385170455626029628178},
    {2.5, 30.0, 0.1412028587992821203562094, 0.03678835496720824365551411},
    {2.5, 41.5, 0.08281391355932041599838968, -0.09224347681666303536611232},
    {2.5, 50.0, 0.02303721950962553044474464, 0.1105304445562543724390385},
    {2.5, 63.20000000000000284217094, -0.04053781516712694554709735, 0.09185507392557480983866203},
    {2.5, 100.0, 0.03832591933237540559426624, 0.06999451452277502903330863},
    {2.5, 120.5, -0.06618330280784489274104778, 0.03006682281741071829516501},
    {2.5, 300.0, 0.04606328299369345498722594, -0.0005573200363913170184797518},
    {2.5, 777.7000000000000454747351, 0.02824716971278178456474339, 0.004549116266176213546922294},
    {2.5, 1000.0, -0.02090577272340679433149311, 0.01412693700240390005836116},
    {5.5, 0.01000000000000000020816682, 7.675627628871647600999346e-16, -7.540050988676122754054745e+13},
    {5.5, 0.1000000000000000055511151, 2.42632250905067526074615e-10, -2.385685351128220535023481e+8},
    {5.5, 0.5, 1.679855796491575357130682e-6, -34600.37232317752279208416},
    {5.5, 1.0, 7.385311938594807843300379e-5, -797.4380194361794819812435},
    {5.5, 1.5, 0.0006543566107377901704197642, -92.08800019920933923870411},
    {5.5, 1.989999999999999991118216, 0.002897151407907735406778229, -21.51306059983231586359159},
    {5.5, 2.0, 0.002973470670503330368376962, -20.97819957534345686073205},
    {5.5, 2.009999999999999786837179, 0.003051355792999380380429802, -20.45974038341065146374382},
    {5.5, 3.700000000000000177635684, 0.05926275775827683603930015, -1.369064537354967121795157},
    {5.5, 5.0, 0.1905643690288370987079786, -0.5717494182902348910593756},
    {5.5, 10.0, -0.1401209323665925289525625, 0.2367544606658414641115793},
    {5.5, 17.30000000000000071054274, -0.1535369219576995425280501, 0.1233210237082239714115379},
    {5.5, 24.89999999999999857891453, -0.1508364661220849721598099, -0.05878444718279782521166919},
    {5.5, 25.0, -0.1440891589521356303555213, -0.07304429387418315465081414},
    {5.5, 25.10000000000000142108547, -0.1360014597512823583396013, -0.08655405303275237598743062},
    {5.5, 30.0, -0.08960649026506861441224052, 0.1164192971158283842634672},
    {5.5, 41.5, 0.06498384560760892281043097, 0.1060782250882936597990904},
    {5.5, 50.0, -0.1131104234585433130841095, -0.003933040039955869866062748},
    {5.5, 63.20000000000000284217094, -0.08267119061412585644931879, -0.05724159660761537859343265},
    {5.5, 100.0, -0.07412466402721935270259568, 0.02968671919910115446548428},
    {5.5, 120.5, -0.02334635247192938825880616, -0.06887354409058676858540465},
    {5.5, 300.0, -0.001285302643461659846594007, 0.04605179328974161631757633},
    {5.5, 777.7000000000000454747351, -0.004984465742677284063406635, 0.02817389570135708763850175},
    {5.5, 1000.0, -0.01387513924302834094957222, -0.02107391356277426258835144},
    {10.5, 0.01000000000000000020816682, 5.80307515726435717368973e-32, -5.223995951854219270213199e+29},
    {10.5, 0.1000000000000000055511151, 1.834698588003550451592276e-21, -1.652403014661976474635403e+19},
    {10.5, 0.5, 3.98550515718812051852859e-14, -7.615088429058377839050418e+11},
    {10.5, 1.0, 5.678187477634622299299106e-11, -5.363499766275993831249824e+8},
    {10.5, 1.5, 3.902410313806113161148864e-9, -7.849622952715436637405055e+6},
    {10.5, 1.989999999999999991118216, 7.313050156096448088302924e-8, -4.222662103748835624405741e+5},
    {10.5, 2.0, 7.701527305196462254198724e-8, -4.010425658234917636528216e+5},
    {10.5, 2.009999999999999786837179, 8.108475984823329303408598e-8, -3.809877292688202225276151e+5},
    {10.5, 3.700000000000000177635684, 3.971382482254556849732316e-5, -816.3890535761269718998573},
    {10.5, 5.0, 0.000726752689741487106326858, -47.55781655417002453093185},
    {10.5, 10.0, 0.1630073663903257453897592, -0.4351234685871790806050109},
    {10.5, 17.30000000000000071054274, -0.2120477552139331750579677, -0.03409908765618723199810247},
    {10.5, 24.89999999999999857891453, -0.1520546124997286076062555, -0.07112492530051542183062487},
    {10.5, 25.0, -0.1446296842975865421439026, -0.08440956130287081052927344},
    {10.5, 25.10000000000000142108547, -0.1360464383724159872984862, -0.09694780075788546300989486},
    {10.5, 30.0, -0.0634973695025455516164633, 0.1364356608860979978994152},
    {10.5, 41.5, 0.1149414596657383197681937, 0.0514086229854227932110207},
    {10.5, 50.0, -0.08484972094355338142992495, 0.07630487814534201298152769},
    {10.5, 63.20000000000000284217094, -0.09559807313469705899567704, 0.03279765384542475014140528},
    {10.5, 100.0, -0.001561123854650779456830968, 0.07999412976470987547113297},
    {10.5, 120.5, -0.07282253510777373808401809, -0.0003923201636036286373817871},
    {10.5, 300.0, 0.04548217506421259484146061, 0.007398354251879861618782391},
    {10.5, 777.7000000000000454747351, 0.02788129731425241703128729, 0.00642656247706759127499896},
    {10.5, 1000.0, -0.02161235234844321561602206, 0.01302155963232475039517377},
    {20.5, 0.01000000000000000020816682, 6.084643833838697033569344e-67, -2.551885335770127627444896e+64},
    {20.5, 0.1000000000000000055511151, 1.923911839684525548063639e-46, -8.070794297241743111962592e+43},
    {20.5, 0.5, 4.091270459487950083004833e-32, -3.796361851895780417491765e+29},
    {20.5, 1.0, 6.014290829258684669643344e-26, -2.584820614501272773243828e+23},
    {20.5, 1.5, 2.414001334965238482453883e-22, -6.449518647286145204897725e+19},
    {20.5, 1.989999999999999991118216, 7.775081762739001108335946e-20, -2.006560505665049695352775e+17},
    {20.5, 2.0, 8.612513208158536026185429e-20, -1.811541092587582068893745e+17},
    {20.5, 2.009999999999999786837179, 9.535231514591152134284014e-20, -1.636318428536073089721674e+17},
    {20.5, 3.700000000000000177635684, 2.30669723074759234307117e-14, -6.844094778158066660009235e+11},
    {20.5, 5.0, 9.683738209818926173047859e-12, -1.653517560552687460341038e+9},
    {20.5, 10.0, 5.824328368524614441005146e-6, -3056.044869380878730726838},
    {20.5, 17.30000000000000071054274, 0.03188844837610370981306492, -0.9404246937134342041050399},
    {20.5, 24.89999999999999857891453, 0.1243930068628298948850406, 0.1697550022559177725685497},
    {20.5, 25.0, 0.1136988350949251286920273, 0.1756622077589800440543036},
    {20.5, 25.10000000000000142108547, 0.1026758230486549213486116, 0.1809716228838130809182758},
    {20.5, 30.0, -0.06429251291919125133371997, -0.1576679959830171878760013},
    {20.5, 41.5, 0.05830435131539753216705412, 0.1193225824068582220340245},
    {20.5, 50.0, -0.08905749444593436832348707, 0.07762984235393045327247764},
    {20.5, 63.20000000000000284217094, -0.05645864071869681384552426, 0.0863749390099153457413506},
    {20.5, 100.0, 0.08064754863072785962255736, 0.0004493469921991077623679823},
    {20.5, 120.5, 0.01989689217312047015534297, 0.07046533257148196750400085},
    {20.5, 300.0, -0.03591448948233386889386159, -0.0289341347597130046156933},
    {20.5, 777.7000000000000454747351, -0.02606015042717788827377319, -0.0118214181837928695698657},
    {20.5, 1000.0, 0.02336539872445442155998876, -0.009529514515093079782149593},
    {40.5, 0.01000000000000000020816682, 1.23472986624778140350132e-142, -6.365362835334673954134528e+139},
    {40.5, 0.1000000000000000055511151, 3.904325816920951345882587e-102, -2.013030598387542124097678e+99},
    {40.5, 0.5, 7.928724376531269357388245e-74, -9.913451873931372877176397e+70},
    {40.5, 1.0, 1.22731430887626840447394e-61, -6.405776981061079990147935e+58},
    {40.5, 1.5, 1.649607968878731243970779e-54, -4.767740562917988511399363e+51},
    {40.5, 1.989999999999999991118216, 1.530235806262874489001801e-49, -5.142353937457245175817196e+46},
    {40.5, 2.0, 1.874213850802993887024973e-49, -4.198619128758485016515449e+46},
    {40.5, 2.009999999999999786837179, 2.293188068526521298943899e-49, -3.43155745484591719891733e+46},
    {40.5, 3.700000000000000177635684, 1.169205871660244462875058e-38, -6.750333533331037804039682e+35},
    {40.5, 5.0, 2.15941031241847528581533e-33, -3.667728702328012179052132e+30},
    {40.5, 10.0, 2.128431744598698891809465e-21, -3.810699458879653605569461e+18},
    {40.5, 17.30000000000000071054274, 2.702861945791648416271992e-12, -3.216360508201184381513269e+9},
    {40.5, 24.89999999999999857891453, 8.600543648152743547511151e-7, -11593.20868659003663432896},
    {40.5, 25.0, 9.785027357335812120985664e-7, -10214.98479735401053028637},
    {40.5, 25.10000000000000142108547, 1.112358571427786609929451e-6, -9008.134848126466374264111},
    {40.5, 30.0, 0.0002383810598062451948995828, -49.18595351296227369292014},
    {40.5, 41.5, 0.1628392047719207299537326, -0.1633520640639498831378557},
    {40.5, 50.0, -0.147046815963916384331354, 0.0002808985530533356045639121},
    {40.5, 63.20000000000000284217094, 0.109871121491850984551032, -0.03231737322633559904216988},
    {40.5, 100.0, 0.08325214087533807939047553, -0.005623825820719944590210757},
    {40.5, 120.5, 0.07419873349812600510591148, 0.01019422414694094412366592},
    {40.5, 300.0, 0.04213827312863403999430323, -0.01913202015807473863215825},
    {40.5, 777.7000000000000454747351, -0.01009514536621367570747355, -0.02679166153340423973864948},
    {40.5, 1000.0, 0.02461748397622080185638596, 0.005578702846324885956919499},
    {59.5, 0.01000000000000000020816682, 1.144249217311720176023001e-218, -4.675332944013889853661039e+215},
    {59.5, 0.1000000000000000055511151, 3.618285713712849450280385e-159, -1.47853264427486876003677e+156},
    {59.5, 0.5, 1.402127174446338080609087e-117, -3.815584661144529847139306e+114},
    {59.5, 1.0, 1.139530983211132332623093e-99, -4.695354491806359145050028e+96},
    {59.5, 1.5, 3.403396517301194975944453e-89, -1.572384311495213041247882e+86},
    {59.5, 1.989999999999999991118216, 6.810375963741739714327934e-82, -7.859685678660015074555499e+78},
    {59.5, 2.0, 9.175424359507357418411141e-82, -5.833813717473931327646785e+78},
    {59.5, 2.009999999999999786837179, 1.234340135734454019258853e-81, -4.336569680056270517114489e+78},
    {59.5, 3.700000000000000177635684, 6.949345850546686004438695e-66, -7.713132697183316378953557e+62},
    {59.5, 5.0, 4.002516806896656762974041e-58, -1.34134130378462514333033e+55},
    {59.5, 10.0, 2.390297671900666975374923e-40, -2.270413911616377485128795e+37},
    {59.5, 17.30000000000000071054274, 1.512196022568525695798909e-26, -3.697533405886032188319479e+23},
    {59.5, 24.89999999999999857891453, 9.889170533888886117401069e-18, -5.956635055576316246914099e+14},
    {59.5, 25.0, 1.228471890588756682527046e-17, -4.799182642476706051920579e+14},
    {59.5, 25.10000000000000142108547, 1.52445984205508257938187e-17, -3.870706912166701523544817e+14},
    {59.5, 30.0, 1.900592335274271367482724e-13, -3.25970806046302995890361e+10},
    {59.5, 41.5, 1.066425286779109867411152e-6, -7004.438638873507919909928},
    {59.5, 50.0, 0.00144432722121303297642401, -6.869593588849440226463699},
    {59.5, 63.20000000000000284217094, 0.1686214846356455898250024, -0.0002225281518682145439088209},
    {59.5, 100.0, 0.0408727573292220568251137, -0.07905309144218428152410941},
    {59.5, 120.5, -0.07108785507095556135298954, -0.03196459252498004586460839},
    {59.5, 300.0, -0.01750711037302874995143822, -0.04311117150093339291980135},
    {59.5, 777.7000000000000454747351, 0.01864927023217788126780572, 0.02175325014913374204300214},
    {59.5, 1000.0, -0.02328437600426142719166984, 0.009776882033582783215640715},
}};

inline constexpr double kFirstZeroJ0 = 2.404825557695772768621632;
inline constexpr double kFirstZeroY0 = 0.8935769662791675215848871;

// zeta(s) for s = 2..12
inline constexpr std::array<double, 11> kZeta{{
    1.644934066848226436472415,
    1.202056903159594285399738,
    1.082323233711138191516004,
    1.036927755143369926331365,
    1.017343061984449139714518,
    1.008349277381922826839798,
    1.004077356197944339378685,
    1.002008392826082214417853,
    1.000994575127818085337146,
    1.000494188604119464558702,
    1.000246086553308048298638,
}};

inline constexpr double kRootNu1A1B15 = 6.321871910549067735214622;
// first five roots of the cross product, nu = 5/2, a = 1, b = 1.5
inline constexpr std::array<double, 5> kRootsNu52A1B15{{
    6.586137118046037568826496,
    12.72353195273119629483683,
    18.95506481037106800683887,
    25.21206740388984808391142,
    31.47945972516251016759315,
}};
// D = 5, k = 2 (nu = 7/2), a = 1, b = 1.5
inline constexpr std::array<double, 5> kRootsD5K2A1B15{{
    6.875357107881435679578791,
    12.87883219610298046871513,
    19.06001511604739431673705,
    25.29115690342814731740503,
    31.54287149686760097147418,
}};

struct RadialSample {
  double c;
  double d;
  double value;
};
inline constexpr std::array<RadialSample, 7> kRadial{{
    {1.0, 1.0, -0.2733318925198110231758442},
    {0.1000000000000000055511151, 1.0, -0.1341333649178777418274965},
    {0.5, 1.0, -0.1798664732775337410828036},
    {2.0, 1.0, -0.5039985948534259880598369},
    {0.2999999999999999888977698, 2.5, -0.08933470151855748615243872},
    {4.0, 0.25, -1.093327570079244092703377},
    {0.05000000000000000277555756, 0.2000000000000000111022302, -0.6547517580100337119575191},
}};

inline constexpr double kAbelPlanaExpInteger = 0.581976706869326424385002;
inline constexpr double kAbelPlanaExpHalf = -0.04048262433252814025389856;
inline constexpr double kAbelPlanaInvSqInteger = 0.6449340668482264364724152;
inline constexpr double kAbelPlanaInvSqHalf = -0.0651977994553206905827545;

}  // namespace casimir::reference
