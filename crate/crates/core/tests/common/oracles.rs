// Generated by tools/oracles.py (mpmath, 40 digits). Do not edit.

/// (nu, omega, J~_nu(omega))
pub const J_NORM: &[(f64, f64, f64)] = &[
    (17.846806908617538, 422.1358637408332, -6.951716897309657e-44),
    (7.031730079085129, 0.07925766919765163, 0.00018607136338483102),
    (21.268361917327734, 1548.8975530553496, 6.00883313152166e-64),
    (9.381009305053817, 0.2452505102046157, 1.1580786143983601e-06),
    (20.02119361355289, 2556.6710028085004, 2.4223855931505987e-65),
    (2.8609222217670567, 0.019935317183284375, 0.19792468660086118),
    (10.108339445871193, 0.6261473932163814, 2.1159674433920547e-07),
    (17.6576888058992, 0.12304389650371754, 4.2264177926358964e-16),
    (-0.02875201471082789, 0.9124956705714694, 0.7830773161420806),
    (6.289950213152879, 0.6406083874152024, 0.0007906053201218914),
    (11.873118824248191, 0.18224263489775408, 2.8727269965937022e-09),
    (29.186822318034864, 53.80599725330926, -2.0214762822304817e-43),
    (21.63817984688359, 1.763682061050031, 2.6441973036350785e-21),
    (28.0014625767842, 1092.9259650627848, 3.801531892440498e-79),
    (6.651612903644703, 184.1230796132048, -4.949058151597734e-15),
    (28.29788312958465, 26.824590677789978, 1.0675697765681911e-33),
    (10.487758763520814, 1.8300324120937355, 8.04406304147975e-08),
    (24.85413196208568, 16.043709082986187, 7.518499784555431e-27),
    (27.990268735391254, 131.53145633237258, -2.1043605886174563e-53),
    (24.366354830937752, 98.82352240521378, 4.348050859098106e-43),
    (10.666693312578309, 0.9417512857736876, 5.521418795337684e-08),
    (28.731481064103395, 155.97132450000723, 2.599741112013138e-56),
    (11.598409357056166, 0.0373228576491518, 5.719732218604055e-09),
    (11.873444271936178, 200.51231922926834, 6.930154037953114e-26),
    (9.272585362610744, 1878.096218373546, -4.922365082187979e-30),
    (2.620050828436356, 41.669721976436875, 2.8588566231417773e-05),
    (20.207232279695514, 0.02364171151505657, 2.1956978372914667e-19),
    (19.481154898331564, 104.69820283251273, 2.4742237885141944e-35),
    (21.129018160506945, 228.3704514779055, 1.4673372040349876e-45),
    (20.773231014160633, 7092.168334654804, -1.6045984004496328e-76),
    (27.28210744482995, 1.0153283481526891, 3.567628451729051e-29),
    (15.806438102416235, 5018.69220702198, -9.178135941758986e-57),
    (6.705450335234135, 1.4332625205981697, 0.0003340520776031465),
    (22.930585822143808, 227.71157436490776, -3.392488652337474e-49),
    (12.20960021068149, 0.01877048944535325, 1.2273396693835941e-09),
    (22.769180792530676, 3123.983586217956, -2.1443291711128104e-75),
    (26.6186497855717, 287.3044218352784, 1.1084987874755267e-59),
    (25.997280935773265, 422.91661031722435, 5.247913304135878e-63),
    (7.152428313463265, 55.732744168883606, 4.866100750183721e-12),
    (13.074045028842734, 53.90454584870924, -2.0236806873694348e-20),
    (18.182104046685662, 0.03309731142670357, 9.172720855989328e-17),
    (25.624094738977085, 0.7694807266992373, 8.429817408533435e-27),
    (12.611564486043058, 1.8009474224371307, 4.1347215280996246e-10),
    (1.4276569667023422, 0.21441549069667995, 0.7867455698546737),
    (14.29107507760078, 7841.88479006037, -2.8941563328919664e-54),
    (20.44463544874537, 0.12997104871220147, 1.0676764971978673e-19),
    (7.8436552276012215, 0.022219575824824644, 3.4609448500023795e-05),
    (26.38364494533307, 21.398418257776076, 7.29397380262677e-30),
    (28.863654894199826, 0.020333271533442866, 1.793612045347412e-31),
    (12.811503088413811, 350.4000295091928, -7.626126760535993e-31),
    (23.5799450953443, 110.26148710975586, 6.0543267397142494e-43),
    (24.122909322971655, 1.7841807236562344, 1.0535372441006788e-24),
    (26.58772352778766, 0.038631640155725636, 3.5898429813657327e-28),
    (20.568352771373593, 0.010374454830682235, 7.326923035567701e-20),
    (20.995994281668374, 0.10064852582559353, 1.9812690401980865e-20),
    (9.015266654148835, 3191.129886513964, -1.8809775452326802e-31),
    (11.628544054043845, 2858.5692478908536, 2.7359796650931224e-39),
    (17.5145461012475, 0.028055881328554348, 6.39798884625918e-16),
    (17.465380902406135, 3.573605776133715, 6.199088324178592e-16),
    (27.115922145511906, 0.029956622728235346, 6.252511329657855e-29),
    (29.855269734173927, 3.0300326277533305, 5.736832678434658e-33),
    (13.723795774138011, 67.80807664865782, -9.425749440616852e-23),
    (8.265289298069382, 514.0491621147887, -2.8497787900499847e-22),
    (11.873645562419311, 17.999143814431015, -8.792812476459662e-13),
    (25.298802051859603, 0.03417875123737293, 2.445157555716942e-26),
    (8.428118753332152, 0.6640548564522059, 9.700391758002613e-06),
    (5.884143325818165, 232.79510906761263, -3.567369767907397e-14),
    (10.883037823332064, 129.3472848701908, 5.350503853576549e-22),
    (23.036267037106377, 3.481970891757895, 3.039927905167845e-23),
    (19.638546647513525, 5.942476978934657, 7.924663963471831e-19),
    (-0.18141716581383704, 0.011119380174648415, 0.8741028688533378),
    (25.027280553159574, 1.5157171768837405, 5.772825721305876e-26),
    (16.72038453417531, 0.7866309929175422, 6.190893609392161e-15),
    (9.670697958821105, 205.23104428434723, 1.0908116101536835e-21),
    (15.340371376059755, 4225.260580823458, -1.2104311656443863e-53),
    (15.329409145970308, 55.22891634039319, 4.124879437551462e-24),
    (24.138575596043783, 779.638451966872, 8.201669625328209e-65),
    (23.281479054760613, 1363.820863301715, 1.407213853673181e-68),
    (12.621132878094551, 46.67234323331323, -5.664544501732612e-19),
    (-0.019808188025423945, 13.174761548300125, 0.2253565878216623),
    (0.6857067125047667, 3.2997471163783727, 0.031690237219086495),
    (7.820850011033439, 524.5372288491373, -3.5882390791706175e-21),
    (21.45943065551917, 116.32066085350577, -5.361561073292682e-40),
    (7.833945362245327, 0.12616567104347165, 3.531436571088543e-05),
    (6.925794541766806, 634.3788209958469, 1.1337768816690695e-19),
    (0.31567264012679175, 59.37628386346919, 0.0009124079371924794),
    (18.187138405511448, 0.03937665900456281, 9.038455719244517e-17),
    (22.621889606502904, 4304.191913774654, -3.8076243636467903e-79),
    (3.6235660652644865, 0.04291612275328445, 0.07227093427851199),
    (24.397296613441025, 0.9148963834104274, 4.4709640325052735e-25),
    (14.409212072967657, 182.69772107862528, -3.0780796515315355e-30),
    (23.17316338590054, 1.7386271611286161, 2.1687992168908987e-23),
    (3.30838828471878, 2.257869325932885, 0.08234220288109623),
    (16.782752148858684, 133.29838985176366, 1.5791934008277306e-32),
    (18.05036340820576, 2190.404766837838, 2.3252409949700162e-57),
    (13.964888826468677, 4230.497617733973, -1.5923679474333381e-49),
    (11.417027865017927, 0.02634332738888473, 8.978375789959561e-09),
    (20.94987510210205, 0.29017844875183657, 2.2803656189455507e-20),
    (22.729398826395496, 242.787977898482, 2.176001513414388e-49),
    (26.233989582562902, 3083.8796663914054, 1.9715751265292095e-86),
    (-0.5, 11.9, 0.44349267301907447),
    (-0.5, 12.1, 0.5039375840747554),
    (-0.5, 24.9, 0.5489777906098323),
    (-0.5, 25.1, 0.563887208313089),
    (-0.5, 60.0, -0.5373414827859044),
    (0.0, 11.9, 0.025049441699589645),
    (0.0, 12.1, 0.06966677360680731),
    (0.0, 24.9, 0.0832459683530155),
    (0.0, 25.1, 0.10827567149994945),
    (0.0, 60.0, -0.09147180408906187),
    (0.5, 11.9, -0.05861286049217218),
    (0.5, 12.1, -0.041931638968443194),
    (0.5, 24.9, -0.01045204054411692),
    (0.5, 25.1, -0.0014716302814300757),
    (0.5, 60.0, -0.005732365912686419),
    (1.0, 11.9, -0.038484579775113284),
    (1.0, 12.1, -0.03566098733502889),
    (1.0, 24.9, -0.01083178309489228),
    (1.0, 25.1, -0.009134245747762754),
    (1.0, 60.0, 0.001553279458605544),
    (2.5, 11.9, 0.0010897652681324751),
    (2.5, 12.1, 0.0005579037968603514),
    (2.5, 24.9, 3.283085344433025e-05),
    (2.5, 25.1, -2.479736190283833e-05),
    (2.5, 60.0, 7.359064532298912e-06),
    (7.0, 11.9, -5.878849290110455e-07),
    (7.0, 12.1, -6.203924531973813e-07),
    (7.0, 24.9, 1.1800657324344238e-10),
    (7.0, 25.1, -5.231315584347281e-10),
    (7.0, 60.0, -3.2586351840112986e-13),
];

/// (lambda, re w, im w, re I~, im I~)
pub const I_NORM: &[(f64, f64, f64, f64, f64)] = &[
    (5.091315088620684, 16.28536959538704, 3.575559701124245, -9.023199679712162, 6.214569053327943),
    (9.157630647797763, -13.571165938312383, 56.58066598988349, 1.2598695321706645e-09, -5.390185511552351e-10),
    (6.542349644976632, 54.61329032310105, 64.12811743102209, -49108157216.073044, 451970368908.27313),
    (11.823122999735716, 0.6144135252753398, 0.8055063548756152, 3.241775621163416e-09, 6.259052629562516e-11),
    (1.5267600338307055, -86.65025514465718, -2.0895687524133764, -2.603186716179845e+33, 5.1221974362861875e+33),
    (16.577378065217697, 65.97736325621487, 20.877469946199824, -8.532381177683455, -5.057003728774503),
    (13.350586980120873, -82.67543248980863, 44.058704274930705, 710043207479.961, -19410146417.481186),
    (18.439927310367064, 74.68102478635082, 66.26895829052361, -0.14137712259633003, -0.03600713960517792),
    (19.864404295707182, 7.850105786779218, -25.8527232439502, 4.240141159904065e-22, -5.279011522227198e-22),
    (2.464869863805438, -39.79526159106558, 57.01444165599744, -1000999946509.9703, 1013303740863.8164),
    (0.025387572395336733, -57.05154018192845, -63.63407234296806, 2.2001843536037524e+23, 8.277998743420767e+22),
    (14.449215576498592, 5.069356662269313, 47.1643059015605, -7.100857172016104e-20, 7.09222048510004e-20),
    (11.52603406683524, 64.50913795048034, -1.8680743657752814, 15631834.25800801, -747218072.4559592),
    (5.163368275149202, 8.743014813640402, -5.8976165813812615, -0.04906463212044202, 0.006263290352072631),
    (15.49454873736555, -29.054217233669682, 43.1029915818638, -3.2615774142232168e-12, 6.759710103261488e-12),
    (6.0876729618790675, -78.04798373534187, 14.074311422719775, 4.8568201594602625e+22, -1.907674613316814e+22),
    (0.5777363255784296, 49.12908765062779, -7.6453088084543745, 7.018618701065723e+18, -1.7834840593994762e+19),
    (9.382130661290828, 8.068834136767768, 4.912686168786361, -5.875118453873048e-07, 3.3007959399924973e-06),
    (11.179201634699117, 53.496696560678586, -73.4376784046087, 1398.5652424558875, -241.868453127724),
    (14.141839153500676, 16.380858587063518, 25.693638761062974, 9.328052200693702e-13, 2.750930012553247e-12),
    (6.287079491313451, 50.7214109926432, 13.031420703977759, 203773023319.71982, -451710870564.4125),
    (2.274048707834549, 61.34791843812871, -14.352788119900556, 3.3401628371996136e+21, -7.624792119574633e+21),
    (10.643930682219954, -86.0566512971065, 1.377423556403007, 7.567875405377594e+17, -2.003678871559107e+18),
    (8.347712406541637, 8.611219587904822, 37.62136334773892, 5.647759140414574e-10, 5.379349597861443e-09),
    (17.572545709823526, 3.851802024637602, -12.927290105883797, 4.0957171077371465e-18, -6.59890626367e-17),
    (17.016878916695582, -37.38571892330917, -55.65170897501738, -2.380206842505049e-12, 1.4227098050669031e-12),
    (9.985685398595761, -32.95343217939391, 85.82944942604554, -2.0715834416135102e-05, 0.00017511830619419336),
    (19.142480178759776, 66.83463575221494, -18.273182031813928, 0.0005340474732316781, -0.0012226760355075648),
    (9.074105434390765, -73.16472556178869, -9.693770293837096, -5818885939071942.0, 7616327691404465.0),
    (19.45325646791518, -8.272627381873434, 71.99555488878141, 3.858228067302088e-31, -6.452600622233986e-29),
    (4.3571264926802575, 0.6324454009907154, -0.49164264035279026, 0.02416964298105043, -0.000700799075693549),
    (17.467127367811603, 16.304652723945647, -25.040089363330118, 7.317335306204201e-17, 1.287045359978182e-16),
    (12.902699921059204, 27.97166489385951, 34.39728373811241, 4.3433549114906844e-08, -1.02077751659165e-07),
    (2.72885449676773, -6.850138872764104, 9.812059899647357, 0.5410978548830989, -0.44057297890683),
    (4.4069494480487394, -21.42332180852644, -54.65447651826716, 7.942528911881679, -32.73006939031145),
    (5.852542680976749, -5.866726873149618, 2.644409059494403, 0.0026527014451162736, -0.004194157311749487),
    (19.15915619724685, -23.348787194349107, 21.57246291486779, -2.763668113537959e-17, 1.1870633148699803e-16),
    (10.391779975080732, 0.06744567734421736, -63.28133054159779, -2.587630317786662e-17, 1.3133607839932738e-19),
    (15.82103547992451, -31.806165103949283, -31.330545409803342, -4.471246695687418e-11, 2.3283551559545865e-10),
    (9.697861368898081, 77.82793778429705, 30.424038332599075, -3912738867176922.5, 3.0804019950215372e+16),
    (14.794045868546098, -81.17285563397137, 41.76433060331331, -640434303.4913335, 341450399.3662287),
    (5.934138041652972, 15.652513841191169, -11.306374724119099, 0.01023655462799877, -0.38827826905826845),
    (3.0025078607572766, -14.995126049900623, -3.781311860696478, -529.201718906517, 81.12869470293634),
    (1.6627063361343917, 51.008587911675455, -14.13202975098414, 1.808037259746667e+18, -2.7404894172306437e+18),
    (13.817280618385766, -37.263911497708406, -19.471214775906542, 3.202079381933366e-05, 5.7508117265363854e-05),
    (0.3154631744465144, 21.255143208301604, 53.977619613921995, -28328314.12226741, 12167531.80815794),
    (7.153652321788989, 80.22184085738239, 19.417906846093075, 2.3935728416669114e+21, -5.743876873475869e+21),
    (13.552447047909295, -3.70525375018362, 72.80772944849754, -9.41374086763691e-22, -7.88709199194401e-22),
    (12.256596425990935, 30.99575033886975, -70.00537685059565, 3.2950289828377215e-08, 1.2518694521648413e-08),
    (7.716560563484256, -1.782444869669579, 40.37653785158086, -3.024651220531315e-11, 9.28622113947736e-12),
    (-0.5240322751707827, 45.896059650602034, -18.320920561320193, 2.2633285640256074e+19, 1.2941343178178691e+19),
    (18.374328579863047, -24.483611459305266, 19.623034743782046, -3.3565190610039416e-15, 3.1063531998031614e-15),
    (10.952479551432534, -50.39474155817319, 41.075568801418555, -3828.3974700557046, -3406.931385953095),
    (1.7631137910257968, -1.6157429800327299, -4.764024156985624, -0.0955095534706721, 0.12472203799251434),
    (4.738228200780248, 4.828613785572444, -3.8785007081701393, 0.0011998646203297467, -0.021426235349199296),
    (17.53474986453115, 25.91955652549931, -51.15417418320438, -5.0887180413365193e-17, -5.933991946145225e-17),
    (11.925030186529378, -28.307229867332904, -76.72116631774736, 3.561207488464184e-09, -1.5797960879184629e-09),
    (7.979986682243672, 5.382503780833277, 10.701975146168405, -3.5687548438355504e-06, -2.8827150640474753e-06),
    (0.025673521174489178, 40.47893078679455, -8.943845557646023, -1.8081192770120636e+16, -1.2261705159784926e+16),
    (-0.38277110906624534, -26.835935422044503, -13.12998326207631, 81120116247.2222, 45320455922.813675),
    (5.00746186098658, 47.961734528635596, 47.50346809576023, 510430368198.3747, -385807642927.0954),
    (17.19364736594783, -8.435891114021578, 6.9762996487642575, -3.477922503357342e-17, -2.3355039242550517e-15),
    (14.456290962551876, -61.31377688933267, 48.05579550108636, 21.642820959240225, -64.18606090031581),
    (9.655605564599595, 10.948809392652525, -11.236344416168636, 8.314183196552952e-07, 1.3103852483363704e-06),
    (1.5528829173976797, -40.47437955884026, 5.454731677617154, 96399495026073.27, 189327591721640.7),
    (1.3522471701024574, 20.090152092285788, 30.778413064062644, -522352.53863436624, -425850.0406169367),
    (-0.20389533563046414, 37.895934120014495, -5.363915737487565, 1939776569693141.0, 2778354525290776.0),
    (3.0095167458542846, 75.37340617138283, 17.95286465263157, -5.128231033449461e+25, -3.827561397107445e+26),
    (18.938196988421552, 48.389120751086836, -66.85364711177122, 3.2103827837871953e-12, -6.245796006480037e-15),
    (9.048455814918185, -19.26529128800136, -71.74456139101672, -5.8172743666621046e-08, -5.452460503031831e-09),
    (5.343697422019042, 40.495383794821024, 12.318964911537483, -422297164.13345164, -1350305726.1560135),
    (18.906585361735996, 12.168467151440174, -16.594679252053954, 2.2109543090520335e-18, 3.5934124808947354e-18),
    (6.6987746112900615, -79.88457504923885, 9.18092301702045, -1.521186513701875e+22, -2.5653203121136472e+22),
    (14.231769607665836, 15.641075682569316, -18.866631397669433, -1.0159127541766256e-11, -3.1758225022927022e-12),
    (15.006131031965928, 52.447217388884944, 8.502039479369294, 0.17022256683279355, 0.01113472117064188),
    (10.923420636490693, 58.448828403904336, 64.82630488517906, 570904.2909044294, -558902.7678799937),
    (12.004322527398443, 8.856071984638168, -48.17778293975002, 4.3340379929185874e-15, -4.92514125397322e-15),
    (5.463691085402216, 44.614425707245964, -0.3222258702324343, 41824548347.661514, -12099132152.905708),
    (3.9952724472586967, 45.31216082161269, 10.463146879278593, -8197974945519.557, -467752123485.60254),
    (16.868534376565666, 27.194654308412513, -70.03443760822239, 3.148011481341403e-17, -2.6275762648272226e-17),
    (1.6631167923442607, 17.378599617327893, -82.18176294831152, -2318.844879827368, 1991.5082462435541),
    (8.383583466778006, 39.56101692125049, -23.848442930419647, 14393.146608575124, -9352.193732160767),
    (15.852208722814227, 49.28671720475751, -49.0787059071368, 1.2277760097585902e-05, 1.830365271681838e-06),
    (6.178209362605961, -33.00447471674671, 67.8054580189505, -1034.0599247133498, 1244.9790370396738),
    (2.9701307468364275, 54.38647826858205, -26.697075996917736, 7.978703510625654e+17, -9945513513809202.0),
    (7.355721502980748, 10.828852068405109, 52.52245999866057, -1.0626105909229292e-08, -7.6933287497111e-08),
    (12.82881627235523, 7.764838697631299, 8.89797730808951, -1.7777790707738985e-10, 1.297712795170904e-10),
    (14.874963439908514, 3.2975777802753323, -19.618514477169686, -1.0747346020213052e-15, 8.951261316959028e-16),
    (15.714051491295441, -26.919532824795322, 11.76615930501556, 3.158257362090511e-10, -1.4909504558642952e-10),
    (4.77804879051577, -15.635684890086958, -4.760065148364691, -13.068977359616179, -3.591270322647564),
    (15.447808804965772, 89.00643771665366, -10.918494904428186, -148631084350.2086, -44424661411.20876),
    (15.145486758606713, -16.609981136942036, -16.37186513789861, 6.030802499098659e-13, 2.449632220055302e-12),
    (11.957384647419767, -0.22293559737523777, -0.5227880729602508, 2.314747204687826e-09, 1.041354296180479e-11),
    (4.0711495252684475, -68.69939066765168, 65.11530327211061, 1.7251741577390362e+21, 3.6058782322253654e+21),
    (5.536011639462795, 0.8493841802131696, -2.082696388601234, 0.0028085518245967796, -0.0003896774317755918),
    (0.5967545201149822, -22.314427562888522, 46.81986279597532, -1274036.2689266794, -38936956.807831705),
    (9.546455693533865, 55.48387079530551, 79.4923270247987, 1411936.4182140133, 2808168.3749320772),
    (8.84135195260531, 27.883366768578345, 30.670080271608263, 0.003104013504984202, -0.09694450864338204),
    (3.833107034454156, -42.12804827642168, -66.84506894378704, 61617037278.8207, -17626884031.213966),
    (13.63765491695541, 47.64086766780527, -25.087580172839658, 0.17696726954420616, -0.03461559454523324),
];

/// (x, ln Gamma(x))
pub const LOG_GAMMA: &[(f64, f64)] = &[
    (0.002509560238479654, 5.986204360986658),
    (38.730326142913576, 101.98465057279586),
    (54.991299078913485, 164.28532480692078),
    (0.009909816130006317, 4.608589766265804),
    (77.16836847565351, 256.95158492148465),
    (0.48687438670060207, 0.5985687698815979),
    (0.027020481213344296, 3.5961562171593062),
    (0.036027763894854944, 3.303718896763344),
    (5.167080927569555, 3.4327493503292947),
    (83.102897041753, 282.92842134881556),
    (0.004597999424828869, 5.379497289875742),
    (23.264500850985385, 49.296278935721936),
    (26.573807478678727, 59.868427183347976),
    (303.736702308244, 1430.5323873713253),
    (114.00887818707768, 424.5202036249965),
    (92.59553647191386, 325.35508051077016),
    (1.610359271935439, -0.11124007458533373),
    (0.0058370770485688134, 5.140183803793845),
    (271.84009670497596, 1249.9984609010253),
    (5.270997534767514, 3.5941777625574196),
    (0.0010257827635505618, 6.881708053196648),
    (0.005324279458209579, 5.232427887042858),
    (0.04764524677289791, 3.0182958893350427),
    (0.07335026255340168, 2.5744446507628793),
    (0.006848239918453087, 4.9798491388605575),
    (1.7902677754470049, -0.07382249109161289),
    (39.1330273331584, 103.45406922823004),
    (1.0360587313855316, -0.019762607436480714),
    (134.61953767134827, 523.8146907260897),
    (308.13268791127143, 1455.6850204364541),
    (1.4778321851353258, -0.12135993501732847),
    (0.0029020304912121095, 5.840676437014397),
    (221.31067637617684, 971.8907882625202),
    (0.003542571581605743, 5.640867856306589),
    (153.5602089991262, 617.8785577605656),
    (35.30054040002364, 89.64634456891869),
    (0.0040229807395162215, 5.513423331212131),
    (4.806471396391032, 2.8907818463888924),
    (0.0018961912053464917, 6.26681647675058),
    (16.085405524380178, 28.133603846122586),
    (0.17554361747139943, 1.6619451855728788),
    (0.009157283144787526, 4.687988679791255),
    (0.5446773264657692, 0.48933063068701627),
    (0.00103743202843711, 6.870408885492518),
    (70.88901775238669, 229.96683257135268),
    (120.22881204229921, 454.11959621142387),
    (2.006831742248018, 0.002903382580740317),
    (2.4274779543233143, 0.23499329695901053),
    (0.009823252755177671, 4.617411826003202),
    (0.2302018694242254, 1.3752663716119806),
    (228.4033465477311, 1010.2848145998777),
    (67.56809233844855, 215.91906472373498),
    (45.34803103503416, 126.6395838734517),
    (0.016000236814370343, 4.1261251026535914),
    (0.3291538078987446, 0.9985999159154579),
    (0.09063620241087599, 2.3550601673788596),
    (2.2004876795277317, 0.09721297568129687),
    (272.74037707396434, 1255.0445599967902),
    (161.50166963294325, 658.0332665885807),
    (13.317311730005839, 20.792734069514406),
];

/// (ell, lambda, t, L_ell^lambda(t))
pub const LAGUERRE: &[(usize, f64, f64, f64)] = &[
    (23, 0.21209583255139297, -18.55397372473686, 32441427999385.527),
    (11, 9.225683164206066, 128.86007821697683, -562792761926831.1),
    (8, 6.305601975317024, 110.4394729637992, 172836781416.41193),
    (12, 7.3366814499016755, 136.8480380185292, 1.3102420032440064e+16),
    (17, 3.2693437428811536, 1.8686788013760527, 26.69014396558505),
    (19, 1.8566541003090422, -7.359731706425645, 307917269.4905632),
    (0, 8.098983438510796, 99.51135804759232, 1.0),
    (10, 9.454991291436542, 62.059661823084426, 2889885612.590829),
    (32, 5.04990646970533, 51.11147531049821, 624419709.8596481),
    (21, 4.647572707983864, 88.46446287420171, -1.1529424768675734e+17),
    (6, 8.480814144570015, -2.1633751748702217, 12653.29004316694),
    (4, 7.2397267123193885, 143.83280029928494, 12828817.488257712),
    (5, 1.040044706072563, 50.05784741046189, -1332344.687859869),
    (13, 2.0142256266789125, -5.8661031065930676, 1504896.7896482686),
    (15, 5.1266999178047294, 44.77740119552688, -50573658.974622905),
    (0, 6.986585419390521, 16.111004254698514, 1.0),
    (8, 8.497548959925467, 67.8109896093548, 976211592.6208383),
    (10, 2.7151113329248737, 43.85542630473534, 99597998.18078643),
    (18, 4.286141050451023, 67.98936431762124, 1729234055365.1558),
    (8, 6.65028439288981, 154.7284847016533, 3597909444214.493),
    (30, 1.041527886260106, 135.60275851605599, 2.510797108761303e+27),
    (26, 2.878494041667113, 55.4510802740197, -40757774891.97506),
    (27, 4.806250799439252, 119.11090657659688, -2.4671390383879115e+23),
    (21, 0.8859356128597303, 156.47446461829566, -7.506682570058183e+24),
    (9, 7.633941304606154, 76.85505136314116, -23821164236.59724),
    (17, 1.78856497365393, 186.94983138226917, -1.7540738707529313e+23),
    (21, -0.5822603372114206, 14.204132781318727, -116.49679009323793),
    (12, 2.2141626855197707, 168.50102983838718, 3.644169355420656e+17),
    (20, 0.7817997205160391, 68.36146623283223, 5701723794437.927),
    (32, 6.233428647327075, 132.90838316106093, 1.5630470549790835e+26),
    (22, 8.788068319333416, 9.004168051246669, 15.762577344833682),
    (8, 4.274656719372472, 107.66066700440406, 163332061011.86057),
    (15, 0.904552969829823, 3.446113677409741, 2.350972682264364),
    (18, -0.7872112268689472, 137.64824184366813, 3.6188497365126905e+21),
    (16, 5.527602420515061, -16.963239566387525, 210137450230.05945),
    (14, 5.1354740729002755, -3.1238690704625753, 1616888.8551052583),
    (27, 4.7523315183622685, 168.1653161178152, -1.944473084557797e+29),
    (10, 6.354017446183571, 141.15666666861924, 240341916670149.78),
    (12, 5.81179966782365, 101.44554100038887, 202447798103114.4),
    (26, 6.088561999726651, 119.32269606742224, 9.087452776541761e+22),
    (32, 2.7940720525310594, 140.94456687208677, 2.638251982325126e+28),
    (18, 7.2896865143016765, 154.28021333460615, 1.175220971146944e+22),
    (26, 8.206939398298635, 63.33688531488846, -273381624494.2969),
    (31, 7.723395274352285, 4.4491647167175365, 3618.20931315287),
    (3, 2.632142619297766, 199.33773413639358, -1210818.1917157532),
    (20, -0.7314724740687424, 95.19373488664692, 7.239264153701174e+18),
    (6, 5.9553081045240415, 99.61469932585608, 615075701.3536243),
    (26, 2.9972704472851146, -1.6611484854540457, 2008224.4413062972),
    (2, 6.767807301467614, 54.9779952648783, 1063.3068321561393),
    (26, 1.0552446177614212, -17.348679218098585, 249121409600716.7),
    (24, 2.958332412922833, 65.12056395819528, -1348311885191.1116),
    (30, 4.766461759734451, 139.38578484992678, 1.9881258784732063e+27),
    (11, 3.952747720334013, 59.992105559688596, -23088293016.136105),
    (16, 9.309027712300345, 177.84425553317058, 3.562878234722981e+21),
    (22, 0.7520755390542152, 193.37641604013936, 9.276743490569721e+27),
    (1, 6.697643283428891, 134.4450121957212, -126.74736891229232),
    (12, 7.920062598442382, 86.87929233005788, 11997308164616.95),
    (11, 2.065506044860722, 121.63641361037295, -579875050896589.2),
    (27, 4.023574186494066, 177.5697613622735, -1.5236005469165954e+30),
    (19, 2.9869115346033395, 74.62858767147588, -359922796109312.6),
];

/// (N, k, a, shape, u, v, p, m, ||f||_p); shape 0 = e^{-u r^2}, 1 = e^{-u r^a}, 2 = r^{-u} on [0, v]
pub const NORMS: &[(usize, f64, f64, u8, f64, f64, f64, u32, f64)] = &[
    (1, 0.0, 2.0, 0, 1.0, 0.0, 2.0, 0, 1.1195151349202477),
    (1, 0.0, 2.0, 0, 0.5, 0.0, 1.0, 0, 2.5066282746310007),
    (1, 0.5, 1.0, 0, 0.3, 0.0, 1.5, 0, 1.9112277960443447),
    (1, 1.5, 0.5, 0, 2.0, 0.0, 3.0, 0, 0.4587161249920647),
    (3, 0.0, 2.0, 0, 1.0, 0.0, 2.0, 0, 1.403104145534216),
    (3, 1.0, 1.0, 0, 0.7, 0.0, 4.0, 0, 0.718928396274755),
    (2, 0.5, 1.0, 0, 1.0, 0.0, 1.25, 0, 1.4564513624208641),
    (1, 0.0, 2.0, 0, 1.0, 0.0, 2.0, 1, 0.5597575674601238),
    (1, 0.5, 1.0, 1, 1.0, 0.0, 2.0, 0, 1.0),
    (1, 0.0, 2.0, 1, 0.5, 0.0, 1.0, 0, 2.5066282746310007),
    (1, 1.5, 0.5, 1, 2.0, 0.0, 1.5, 0, 0.5384061015798932),
    (3, 1.0, 2.0, 1, 0.3, 0.0, 3.0, 0, 1.5358996682663113),
    (3, 0.0, 1.0, 1, 1.0, 0.0, 2.0, 0, 1.772453850905516),
    (2, 0.25, 0.5, 1, 1.0, 0.0, 2.0, 0, 1.5479923996813372),
    (1, 0.5, 1.0, 1, 1.0, 0.0, 2.0, 1, 0.7071067811865476),
    (1, 0.0, 2.0, 2, 0.2, 1.0, 2.0, 0, 1.8257418583505538),
    (1, 0.5, 1.0, 2, 0.5, 2.0, 1.5, 0, 4.489848193237492),
    (3, 0.0, 2.0, 2, 1.0, 1.0, 2.0, 0, 3.544907701811032),
    (3, 1.0, 1.0, 2, -0.5, 0.5, 4.0, 0, 0.3231761822540326),
    (2, 0.5, 2.0, 2, 0.75, 3.0, 1.0, 0, 21.057184207239878),
    (1, 1.5, 0.5, 2, 0.3, 1.0, 3.0, 0, 1.077217345015942),
    (1, 0.0, 2.0, 2, 0.1, 1.0, 1.0, 1, 1.0526315789473684),
];

/// (N, k, a, mode coefficients, p, ||f||_p) for complex mode mixtures
pub const MIXTURE_NORMS: &[(usize, f64, f64, &[(f64, f64)], f64, f64)] = &[
    (
        1,
        0.5,
        1.0,
        &[
            (0.024402571703833923, -0.4204935829669999),
            (-0.11235297887399412, -0.4789202697307985),
            (-0.29642451005912385, -0.9161552087468082),
            (0.6150577577822378, 0.49530365798090725),
            (0.7559329669122433, -0.35473057091084564),
        ],
        1.0,
        6.5221377852238955,
    ),
    (
        1,
        0.5,
        1.0,
        &[
            (0.024402571703833923, -0.4204935829669999),
            (-0.11235297887399412, -0.4789202697307985),
            (-0.29642451005912385, -0.9161552087468082),
            (0.6150577577822378, 0.49530365798090725),
            (0.7559329669122433, -0.35473057091084564),
        ],
        3.0,
        1.1943288106763847,
    ),
    (1, 0.5, 1.0, &[(-0.29642451005912385, -0.9161552087468082), (0.7559329669122433, 0.0)], 1.0, 3.3169458904949765),
    (
        3,
        1.0,
        2.0,
        &[
            (0.024402571703833923, -0.4204935829669999),
            (-0.11235297887399412, -0.4789202697307985),
            (-0.29642451005912385, -0.9161552087468082),
            (0.6150577577822378, 0.49530365798090725),
            (0.7559329669122433, -0.35473057091084564),
        ],
        1.5,
        19.707972699938868,
    ),
];

/// (N, k, a, c, E(|e^{-c r^a}|^2))
pub const ENTROPY: &[(usize, f64, f64, f64, f64)] = &[
    (1, 0.0, 2.0, 0.5, 0.886226925452758),
    (1, 0.0, 2.0, 1.0, 0.6266570686577502),
    (1, 0.5, 1.0, 1.0, 1.0),
    (3, 0.0, 2.0, 0.5, 8.352491995247561),
    (2, 0.5, 1.0, 0.3, 22.222222222222225),
];
