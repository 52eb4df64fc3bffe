@problemName SineNoise
@univariate true
@equalLength true
@seriesLength 64
@classLabel true 0 1
@data
-0.07136695346360263,-0.3955173000704943,-0.8312762953813649,-0.9660217348738405,-1.0454546288901196,-0.8330488732208426,-0.648711050525372,-0.3423135932188803,-0.003981668640502034,0.4244693746698522,0.7584451047330325,0.922170449544598,1.1266490790619426,0.9936059260148848,0.3815670133769418,0.12416659352560422,-0.09168638680069825,-0.4924076398893745,-0.7362665869313376,-0.9279985469722787,-0.785458822117017,-1.0041355707535335,-0.6904437619862386,-0.10879075737313856,0.13887947721536664,0.5164949359693652,0.7062302495124523,0.7849232229889698,1.0139891720443959,0.9038349032664602,0.5299480558490814,0.2447452519443155,-0.08141354556790455,-0.5446637610378151,-0.7674578834664202,-0.9401824373275895,-0.9936840739165731,-0.9435626603157371,-0.5933084540949567,-0.22395122269414064,0.10629400805183807,0.3683655759927066,0.8307961150597426,0.8995867382278298,1.0851587594509207,0.7857547527965612,0.7441299815864172,0.31106157266082224,-0.19908406662862313,-0.4815785459284219,-0.752220658804044,-0.9224516061580896,-1.0954615101162195,-1.003670799200825,-0.632724807988831,-0.3597428798103506,0.09775973876820397,0.526140550979575,0.5927521500461034,0.9751695517262966,1.1197073943756952,0.8631808100472583,0.5716018029497822,0.3882923008403298:0
-0.28090014154696186,0.17095157432464636,0.42206293677794304,0.614113068585928,0.9409517199729139,0.9521016978437893,0.9672124298918403,0.6665931447763269,0.14315986992426602,-0.20087957525721017,-0.3682056041243446,-0.6943183942163644,-1.015977133034888,-0.9967893928016406,-0.8451226923094644,-0.6003894263538838,-0.21862057355634124,0.10701182996904628,0.4471016738862202,0.7364100894793644,1.057527076497364,0.7715990856370587,0.8758145151779502,0.6505298703370177,0.1637098970807576,-0.04808190593308529,-0.5217126090274093,-0.676050416326573,-0.9645120048474717,-0.9297691890659671,-0.7677956871699607,-0.6089369016672646,-0.39381690751006276,-0.07006859592357403,0.6319229195347102,0.7511656766393979,0.8830963016806067,1.011110221950995,0.8705389146388198,0.7324440863598807,0.30963761141148494,-0.07998830888504775,-0.5280424798863661,-0.7153380860833982,-1.055339468679536,-0.9300955691685157,-0.73728629638807,-0.7996984637485273,-0.5528677163029102,0.143051142762318,0.7113742893313854,0.6622024110709605,0.82688322056384,1.05558140652296,0.8056078886812541,0.5966273115449358,0.27143304649939737,-0.02816305861770961,-0.4971147439223813,-0.7345066119501313,-0.9696061223333953,-1.0811516235100727,-0.9216626734614054,-0.742269826455404:0
0.7875591719702015,0.8507640242307843,0.883473228640478,1.0169317492661225,0.6117523304530018,0.26357230637895235,-0.06893919647225252,-0.5329508400972188,-0.8097612101310422,-0.920635773454157,-0.9645210813455621,-0.9871652404288405,-0.5337364928165699,-0.3280060032550611,0.014484943432595696,0.40081763284242566,0.7478531389476941,1.1258806724496546,0.8752090750779242,0.8872431569890317,0.4032883166744784,0.2688058156116372,-0.030136196716412586,-0.5145314720484763,-0.8498431657715605,-0.9399995405814943,-0.9227474904549371,-0.804869810633857,-0.4198233670905571,-0.2480457616925293,0.06085182848871991,0.47826722084366635,0.779657818821245,0.9740243853351598,0.9897598842470586,0.8886321616252181,0.4499857464220251,0.35192540453016136,-0.1775667653561163,-0.6081810094870346,-0.7231325574190827,-0.8314180462487393,-0.943459850620058,-0.8551196363510457,-0.7102927830207331,0.018194224855192676,0.20811870053016374,0.37693567280803436,0.7089438817592516,0.9718485718445379,0.8372895523704036,0.8880986084366492,0.5711635969122593,0.3915895689577791,-0.02387737210118812,-0.7619936835858091,-0.7827374147804947,-1.124897396939716,-0.88179886564515,-0.8544249808228154,-0.5622302072648383,-0.37547498180648736,0.3029358622635627,0.6928724765573763:0
-0.4235533265117893,0.10727826950799524,0.3790831222728833,0.752510591125312,0.8218363596925757,1.1842617703727827,0.7979089078144339,0.6262688397856265,0.3672245153602204,-0.13475282516297632,-0.47034460808513134,-0.8112315694540817,-0.9617461330986615,-1.1146014824247512,-0.9386256664829309,-0.6765665137566005,-0.35044882262958177,0.07566575281074286,0.4171031431762289,0.8301887256553233,0.916080465036449,0.9838822592851325,0.8283487253231164,0.6032257372738525,0.19062694316719714,-0.01811826523356682,-0.5606651668771533,-0.8294532246302188,-0.9124755924139115,-0.9572898823202678,-0.9348383340232096,-0.8578038023342565,-0.2750248935196093,0.09595310321056907,0.30517524356472325,0.8318997930908334,0.8782900775716893,0.8849284072993908,0.9043999300191267,0.6380301781454549,0.337338622348285,-0.23057156315380334,-0.26519035348466646,-0.8151334462657589,-1.102365988464673,-0.9356630000580062,-0.9303072719328203,-0.6233913727080833,-0.3510370653116709,0.06402272127337086,0.4709906494857639,0.6802022964130938,1.0162740172009888,0.9505572090067665,0.8078581445056539,0.6635804634676268,0.3615803500982747,-0.09290469148322317,-0.5326653438198599,-0.6928890281805227,-1.1244329368273094,-1.1006336325182744,-0.8908745698693643,-0.7919831611158807:0
0.9282783074317192,0.7045845026184344,0.4764348820320498,-0.08727843662984487,-0.4413898614583715,-0.6708121025085869,-1.1680202410840435,-0.6899869475555275,-0.9953439540529794,-0.783054319692837,-0.3004481520558618,-0.00818378269505327,0.200856347223848,0.7668230089879484,1.0078016654633835,0.9549965500993918,0.8973188451776003,0.7586692741462193,0.2956828781547882,0.04803945497217672,-0.35886935804975795,-0.7716235325562782,-1.0614740694446463,-1.0225517605230945,-1.0130211068328197,-0.6099297918522637,-0.372152366296241,0.07400785370450366,0.3922614026286535,0.7304203826871895,0.8439639903404238,1.0667959201042003,1.1039487084375053,0.679102058868526,0.32728345037481854,-0.01158307166754912,-0.42692723745431993,-0.7742782008440403,-0.9084445176666451,-1.029082930751995,-0.7815915216225371,-0.7100506501247703,-0.3541697053830907,0.09100158824849393,0.3487236238437499,0.8478039249875801,0.8589944608114506,0.9191584072583735,0.8888521791217778,0.6985990752235692,0.24642908313632853,0.0006911201386016787,-0.5455478681381495,-0.5649164309241362,-0.9303635772042312,-1.0641869499165835,-1.0163126928351602,-0.7485138618411027,-0.4088688499892765,-0.10865169511262253,0.2868196997119205,0.6854127704725324,0.8701855072838975,1.093912487814818:0
0.5771214054798657,0.09053950161107242,-0.2516395584238023,-0.7749352840549102,-0.8224417672579307,-0.9990955662439587,-0.9057864312515629,-0.6071572843002612,-0.6914201436897494,-0.0628425633457407,0.1890876093124682,0.700636115832847,0.7548521944583455,0.9464972625922331,0.9745266384226839,0.8285438361031644,0.47081377698897026,0.009654287352301671,-0.3543527374007952,-0.5529661575674601,-0.886733499769846,-1.1644186589767382,-0.8698869920196775,-0.7255680494882798,-0.3759928135301185,-0.12260012788875109,0.381815167471917,0.5353099546922304,0.9431835192877379,0.9469991883298268,1.0216884333386613,0.8677573091012664,0.3897353528544603,0.0838144333012087,-0.295104052983656,-0.5224499649083352,-0.8151277290642129,-1.1179649736936783,-0.908492436775791,-0.6926839765217148,-0.2509537784625391,-0.2568522909265041,0.24536428563585672,0.7747535655011313,0.7506765083405218,0.8760911609001597,1.0059614823846765,0.8690337635475047,0.39646631931775805,0.14295009848029122,-0.28730398868626095,-0.48954154329052424,-0.8863353821720663,-0.8970124880958257,-1.0445650487780733,-0.7856807824058286,-0.4730048134314955,0.0249734134974373,0.3569608195813012,0.5662411335630406,0.9543803145691845,1.073100346935394,0.9430886906147021,0.7414266659564456:0
-0.9025495947700564,-0.805941901281925,-0.2739491246039036,0.1188333148417142,0.3825015582475315,0.8455686422867847,0.818869840828577,0.9402600821904578,0.8356473633286452,0.8351936438819288,0.1329050190905774,-0.039112496398359856,-0.37484208286453324,-0.7335514608952924,-0.8379857399756006,-1.0957151330423958,-1.1111951304590195,-0.5597608717860104,-0.4124062418834746,0.06273553426439246,0.35116981088095167,0.8765582029942321,1.0426815578976816,0.9234349981390543,0.9735184546887665,0.6485703866150085,0.27888454236038934,-0.08963385571474924,-0.489329346608425,-0.7098234909181822,-0.9251317773666311,-1.030388078973136,-0.7825436956462449,-0.6975902221594196,-0.2641300611096189,0.1375910590442172,0.6169351166070822,0.7207798809643821,1.13047477904198,1.0130578594919961,0.8637715791625433,0.569195385589176,0.3514527673218175,-0.09048199747474742,-0.5794153372162076,-0.8841127349251424,-1.0117184551909926,-1.06304196471687,-0.7741390310550798,-0.4988888308860194,-0.2059674630296135,0.1311624109220918,0.42623058983897133,0.7767723383913032,1.0446372350137938,1.2085385877020847,0.9744591907579802,0.608401446253565,0.29662593299345325,-0.1436300120341686,-0.5472942682183706,-0.7897482175210752,-0.9366050651904276,-0.811851205661997:0
0.5452718769595998,0.31261975527834546,-0.036480803880613116,-0.5630002940234101,-0.6808410918041687,-0.912738174647362,-1.018755622596762,-0.7945147564838945,-0.5377808481597678,-0.2001178507764971,0.19335158869359384,0.5853020113966788,0.8850390946140143,0.8957435275883774,0.976063326901181,0.6687972567742823,0.5661481798922818,0.23924389536014057,-0.19683422815710638,-0.5422957658575055,-0.7826266702098259,-1.0507417995259503,-1.0009069790332599,-0.7699405545872045,-0.43988005649134676,-0.13739180764747697,0.4685156542286064,0.5617450238308925,0.9415870235012771,1.1109044829292585,0.9636251084666231,0.7389814707485087,0.42180833721154204,0.19311164776491946,-0.10220051653920395,-0.5437142411638393,-0.824335373028817,-1.0221531034055211,-0.9208991198214435,-1.0346158641131553,-0.5168313048267881,-0.17407131682670643,0.07619568733691437,0.7884408734637671,0.7028796574103335,0.8764796654194844,0.856915782345518,0.9320695391446499,0.4512601438483408,0.24374958907842387,-0.1544786967409632,-0.5449140399445668,-0.9723788712314853,-1.0454423529030326,-0.8096905960973929,-0.950108198907043,-0.6232341260011038,-0.1931086000600406,0.29412871919682543,0.5960450001098676,0.915825396495326,0.877502291807051,1.0714797524924018,0.8779356406266634:0
-0.4660444594404196,-0.49351304577429256,-0.6606048273443519,-1.0735715199505675,-0.9462770350312839,-0.6223192265948424,-0.6043877230886451,-0.27998993498675206,0.17689359170806387,0.5907979879294125,0.8320003921633888,1.0574485016201565,0.97869595388926,0.6374537584386906,0.5130016971548104,0.2684120372478976,-0.18688257602102687,-0.5483939217966662,-0.8878268205097406,-0.8983506447714416,-1.0484555986899116,-0.6869600212052918,-0.4649885420940414,0.03208666670816776,0.35318905905384174,0.5385166879937852,0.9026439087092285,1.1185359312170753,0.8389189281862741,0.7061474970871305,0.37939639930715263,-0.0685606909647987,-0.2104611764010853,-0.5164049362664176,-0.8098402926561749,-0.9724567526921691,-0.9570454551243999,-0.7381234548531317,-0.5294192918550348,0.008380656965389699,0.41113723633189336,0.7407590199654082,0.836749791589998,1.004554218430577,0.9352642347950199,0.9409189637023309,0.47423332033818316,-0.10720318631326202,-0.2667374388449473,-0.45927804165791875,-0.8213270417396207,-0.9087658132312756,-0.9482361900080638,-0.9592004335241157,-0.6372894755512207,-0.2055986805533662,0.2939048002240819,0.6785045162141485,0.9587860285758294,0.9626679799594243,1.047535242534064,0.7340866090676352,0.38581474861122333,0.1661680746242679:0
0.08085047887582619,0.26323186475278854,0.7123675532328465,0.9854136718171268,0.6770276244885347,0.8084150461511865,0.5414922997857871,0.07513515498423182,-0.32054532364602395,-0.5823865526448256,-0.8730732460911174,-0.8500058663276733,-0.9475590958802207,-1.0022143953196019,-0.6601664826457624,-0.14726659916895707,0.3618926540820334,0.5747903072093209,0.8494344835935846,1.1620729636840377,0.982778255991599,0.8132187549355703,0.4333764574329214,0.16647914365838895,0.04557629707357147,-0.6783144970837708,-0.8172440584463121,-1.1168304600620687,-0.9721978255883248,-0.7553641304238315,-0.5990662676434072,-0.14474602485120996,0.24437935973712754,0.5808428394455905,0.9899880290692323,1.0538814726666426,0.9545494437800689,0.7760464959198323,0.49017070091165355,0.265367495644661,-0.20466715861126047,-0.2632236539344663,-0.6341184685658202,-0.9974501172174689,-1.0179585258098,-0.6751111954374025,-0.7630373137925887,-0.2629358578116707,0.26737067228577893,0.4449306007429994,0.7706802318182873,0.9408836006573679,1.051126250044157,0.8578815392513578,0.6149100766909035,0.277309124399494,-0.16930115436852836,-0.4250837380100285,-0.8912591162381993,-1.1196098668295003,-1.1627325808747457,-1.0062298286652906,-0.6297529086168475,-0.11477606255552818:0
0.17416675737197657,-0.5985466095353628,-1.0698555930156628,-0.5288856513305837,-0.4036663853964377,-0.5650993908991825,-1.4325443207427366,-0.4758078211222693,1.0171361333790776,-2.174608941595472,-0.24060867244437567,-2.1213483548325254,0.18304761057790167,-0.7474893909083051,-2.085687668092666,0.1007021899334244,1.8174053535523906,0.10889153335216269,1.1617914837823475,-0.07150440216890899,-2.1575908281620957,0.490483490624009,-0.4182793068122131,-1.4620849276728791,0.7848366739231182,0.28685756545382673,-0.5254096407181754,0.868069425402096,-0.8720719677930326,0.6434323387400966,-0.9404604692433001,0.5339547617060789,-1.1007479445493213,1.4891882030211117,0.2543075000159044,1.432875115993112,-0.8224459775198497,-0.4761023729675279,0.8396647985148009,-2.7437171483093246,-1.0667908546472529,1.0331769522816747,0.4651093238943746,0.9787693424178078,-0.30976088708472405,0.563999381603121,-0.7308442702168229,-1.3719603676223968,-1.6947949737166204,-0.5517095710304244,-0.5489414224245007,-0.6293773975967116,-3.5488049709979372,-1.9986036000365417,-0.5326324891934551,0.2870166275975515,-0.5787926250470458,-0.8768972003507037,-2.308473333151637,2.021499038975929,-1.1011112794669269,1.6833966376990939,1.560685916993547,0.27392906590093297:1
-0.5726094050626782,0.13221553118226376,-1.1530419740393554,0.2607301266979909,0.002952147849589352,0.531968267948261,0.9504368486437819,1.7328384874128449,-0.3883158345166537,1.0433884177592827,-0.7916695806289007,-0.8945649475212611,-0.6180564353193759,-0.9819656557896612,0.980264318334658,0.9232411384617251,1.27231174703939,-0.025300329264120056,0.27438159608727786,-0.5784269986000683,-1.1509612478497493,0.44701815053155675,0.26837311131653563,-1.1070132650577227,0.5853324666466068,-1.7417273425997286,-0.1789984841245339,-0.630313837115518,-0.5292762162227943,-1.0834577552252005,0.9524940914618955,0.5659482120491224,1.1834202668111746,0.13049734864517734,-1.2980536541958756,-0.37900151794481424,-1.1915178053735453,0.44679516497993094,1.198705929048254,0.31609039157959024,-0.6125209138596496,-0.3833271224834214,0.190450002666645,-1.4603573935504803,0.13460214325955527,0.1834978775243717,-0.5602428756521878,-0.43403526704537876,0.15384464308496765,-0.8382888472561887,-0.8404627939966254,0.7599708644079872,0.20337071953821506,1.6586636008151843,-1.0079779989284938,-1.8009658486555078,0.9187788841678789,0.9341444187912877,-0.7621833260682251,-1.4928570128965188,-0.07219059119776025,-1.7779053892097485,-0.3689646466587515,-2.2109122000117822:1
-0.2679457635683625,-2.151350270195979,-0.2688396014372879,1.4845112605106796,-0.3006952257657909,0.7352385818649416,-0.6770767447584621,-0.9284830391064188,-1.5350783740320315,1.0023084628535774,-0.09697973058103007,1.5823182677789085,-1.2198185102018095,-0.2650924009024904,0.03618678805464951,1.3681716986013837,1.7769346512604225,-0.6945933575499162,-1.180283911849588,-1.7838454781954174,1.2887231687245124,-0.13599423088681162,-0.6974769140037069,-0.1014400066356889,-2.608908472609203,-1.776633025684182,0.8838022868727097,0.3440325538519612,0.09807949309232442,-1.0536869104243363,0.5353450488721306,1.7259053255339913,-1.2772682359691314,-0.03816312861770822,-0.4881837283636457,0.3076118347894994,-0.039425213494835805,-0.20061995515134984,-0.9358153467573216,-0.06958525418711159,-0.6682911594544894,-0.2003965791014318,-0.11751377734222924,0.6002955196514277,-0.6363173315592242,-0.37742020343737065,1.0179669017711024,-0.2723271956196908,-0.3159642205021737,0.8102701474076616,0.21852618490827863,0.03724262388093613,0.166195485167498,-1.293020305872751,0.4082036489905961,1.2737979672036042,0.5299164444082823,-1.6061770608253054,0.2352602976603339,-0.9527249184256126,-0.273339625362273,0.08390972009103834,-1.2370305227195744,1.292105440168007:1
-0.11166165863698796,0.7504063899405696,0.5934798586408456,1.3033566713091778,1.1517683742801164,-1.513160190284853,0.004810902964497788,-2.1724055166424225,-0.483776981648209,0.6784226860938259,0.8782966528005957,1.2538259582144544,-0.4117776496496913,0.28596408111786736,0.06367363083195574,1.2336868117759543,1.555299990687162,-0.3915332986795695,3.7516349672663583,-0.036040734179385275,-0.39888843329431256,0.567840036747218,0.7271923850578366,0.515614254762156,-0.679676633510859,1.443800971517405,0.02582386389481303,1.5104701666820597,1.3665618615141275,-1.298855229333859,-1.0043131269308443,-1.0242331378104215,0.22707756059134257,0.03211412250079835,0.24757523953398958,-0.8327108093828304,0.4071473659154056,1.385104609768259,-1.3535947146457399,-0.2137952436475663,0.23100575450325914,-0.14705057858035545,-0.21412744475889497,1.752263984545271,1.2670675047848043,0.8333949433261522,-0.7771995633914595,2.225606719971853,0.3459026627223867,-0.5929759428406611,-0.352377281468836,-0.5043286191577014,2.1065366439613324,0.19118697567674273,0.04931968294274557,-2.1666121593182464,0.7238102522772645,-1.0714959570851907,-1.1429566337463961,0.5995576979640092,-0.8764085171864693,0.8228349505059208,1.1088930879484957,-1.802394920490876:1
-0.14911003486829763,-1.5868179689111586,-0.07493398281475719,0.8991979785062258,-1.3768273659052244,1.7891598107389093,-0.32464113887936297,-1.197567800039643,-0.13931735198085365,0.7767747277249033,-1.3929332960279637,-0.014265961148294098,-1.3898124962727794,1.187546171524501,0.13787289283264367,-0.4426848543133972,1.017486474381074,-1.3066112595978296,-0.4116867936057472,1.827518567008105,-0.1430663804640684,1.337560930857414,0.1757359503214666,-0.7196249616847328,-0.26622137111407684,0.056934041566392736,-0.4300137156429038,-0.8447017297602396,-0.8023916780971501,-1.5044679367636962,0.08910326993885365,0.3720808449048407,0.7272999020487253,-1.8275862457309329,0.7838677215294181,-0.03910607275850584,-1.450615951867245,0.07583511244810598,0.7925948111630794,0.5004207311825053,0.7033272376323464,0.9233344351065464,0.8739572548599488,-0.05745004884908064,-2.104230608494548,-0.7812315724231464,0.33459613838192825,-0.49087282137445293,0.6643822083089399,0.7768181049834226,0.027355611329157682,1.8591871023681141,-0.995532941551476,0.9110583325938256,-0.49258600345326425,-0.8004663141111169,0.5688152699250151,-0.6356137693519687,0.8392889817161153,-1.186293687218223,0.015583934055897898,-0.8629299223035118,-0.2544780596162145,-0.3914113416500048:1
-1.1479693811033498,0.6362796663017971,-1.2642435412008066,-0.9990895669559258,0.8727511686622557,0.9547403510077993,0.6494452753407791,0.32204059097565846,2.260272533607259,-1.2274054124618146,-0.7609881813398689,-1.0112774540264333,0.8814588324487762,0.27100994692420716,1.0939859326716501,0.9557623322531749,-0.2416249577797958,-0.8353966684773061,-1.0084499653051306,2.195673711626423,0.9518233470077712,0.5775320091903374,-0.3543304420202529,-0.21339817076162462,-0.3590921357632276,-0.3387848285579292,-2.4184993686015135,-0.07619941663129699,-0.3971336667341233,0.27495632326711866,0.19483956316952594,0.8387179933254993,-0.027649280432602362,0.7824317922769016,-2.575443021488718,-1.1156770845743353,1.7114427970625996,-1.233518897717998,-0.29330476902521696,0.6926035350945932,-0.8967196014119552,0.7083744951907623,-1.4422564459865341,-1.9275061837329406,-1.3434523012805235,-1.6678674139976426,-0.03185937479377198,-0.3319393329345504,0.31427759144431655,-1.0498944700864374,2.5287573714323086,-0.10962082832753091,-0.05991738870379272,0.4416601359453396,-0.2575997536712705,-0.6455207839591339,0.07179854334532139,0.9047775800869076,0.6517590520890427,0.9280803538705531,-0.5777806982240823,-0.7883017117495554,1.9911670730013253,-0.25188976520190054:1
0.46569374595293467,0.7259218388756472,1.4085023519690147,-1.363228233484873,-0.4920692292392021,-0.44529330501526143,-0.3130806875792165,-2.4242351152747084,-0.1075960948968126,-2.9051732668754875,0.2870933978982107,0.5268477152703763,0.587422340072091,-1.2150816638454442,0.9450478183558719,-0.873907269149644,-1.2368271525133936,-0.9898289732800976,-0.8570382614942533,0.16350943834447573,0.8160107040549351,-2.110056045471277,-0.549277037662523,0.8939716512923349,0.19619494276404675,0.5017732894669531,-1.5046709695834803,0.948737413137107,-1.568944174498173,0.190071464029151,1.3612573908879932,1.879350389846965,0.5115365500463113,0.880969201958292,-0.6063316341717568,-0.48144413223591787,1.1694233713875724,0.001606382472464278,-0.12731382386099743,-1.410558100187072,0.15059097789474135,0.6458634070826382,-0.7941694752404448,-0.507079822448734,1.5804565960208934,0.17826614914886277,-0.2885936455850023,-1.1369827893393376,-0.6195790312810469,-0.24999625104151021,1.3691278512137175,-0.610494698182247,1.7943357674660545,-0.928687816950862,-0.35758680482605343,0.8435436479109178,-0.24019493113508333,-0.8302620424006066,-0.13184341148167436,0.4487124934289335,-1.7157342148490498,-0.24853634574867037,-0.10933662445164567,-0.403747759925666:1
0.7353560663789904,-0.5685521695158746,-0.36451484858633476,0.03764258736252721,0.7288490943154601,-0.22116261764771045,1.516597270901757,-0.9077183000237283,1.2865143523340856,-0.8578215511106644,-0.16306648197587428,0.36404618536754896,2.0548398612597034,0.895826146653094,-0.4058628495569436,1.2991191155917212,-0.21370490489370653,-0.7914458562996477,0.4486846917866825,0.09447084803329689,0.9536663672632354,-0.5497383641473134,0.3815034976609251,0.6345493328347688,0.2780455595506801,-0.02898353209135806,-0.6976183740910009,0.9037517913553875,0.13722450031243333,0.49630397250885694,-0.35077824086059206,0.013011690742152053,-1.0372279917047185,0.08552529513580198,0.7652103236543112,0.09299328607983211,0.8593928105182447,0.3129104821226719,1.363856630019318,-0.19004963215280277,-1.6386302265529098,0.43248822908557016,-0.16518948787756252,-0.9742933822826597,0.6512653579227652,0.2643291392546375,0.4453386019346198,-0.33237595078669135,0.19704716424775492,0.25433904415542485,1.7746551065417,-0.6839597644586848,-0.010494199557395853,0.36385981226964653,-1.7247869260953994,-1.6029683674281936,2.1658183708278105,-1.7671189536616683,0.574929144655259,-0.8482254060645722,-0.7631601027511313,-1.9825249042723423,-0.9007385723253475,0.7843786155036819:1
-1.3887428409165128,0.5954268803417825,0.3132977493485841,2.0183022993523925,-0.47453358325771533,1.2634140392028048,0.88886895424144,-0.2866684173182853,-1.662955988936166,1.509440379586508,-1.3643889058435419,-0.4734159526227956,0.8831765400001867,1.1159555687932858,-0.8454466961579888,-0.032001685898224747,-0.25857844206934893,1.1815585755823625,2.5046333741809184,-1.8298868255199323,0.9164229099842688,-2.8581753769067246,0.01406637216464734,-1.1087845239491876,1.9918187901100528,0.16636852830105928,-0.7367717479557876,-0.4993128547088203,-0.5752957520422238,0.1883116085626878,-0.15814847037970742,0.655885573981522,1.540261081924691,0.7014120469074839,-1.2260030477040933,-1.6238068064859852,-0.7554195256557019,1.0532152643097332,-0.33504815366534896,-0.6675728190765841,0.13828255780588264,-1.4155259495914145,-1.1393277216692916,0.510325425209473,-0.30315349290822236,-0.45323624209051777,0.317635025316504,-0.584871203180809,-0.6862910465626746,-0.4598101625336741,0.6026205891115991,0.05981993572120316,-1.1945975846763108,-0.30305691452920813,0.6482239264513066,1.870751943156877,-1.1423539921219512,0.33853529404852295,-0.2587482768153575,0.825519436812254,0.44955497731606664,1.4721769077408147,0.5194509022746103,-0.5451133122289074:1
-0.5385931781792882,0.4055501097171292,0.39494318942459034,2.3979372675854025,1.6763327196655948,-1.1735783523750556,0.35022479577355486,-1.3309888613685903,-1.655676895719328,0.7435460014427098,0.5517475330451567,-1.0385677943370097,1.643686738098532,-0.977569929500294,-1.1677283811466697,0.6526182214200285,0.22093854571555138,-0.16050800096883255,-0.06706583290096389,0.22380079125852775,-0.1395799857488353,-0.17250486828103703,-1.895956688666449,-1.341961366009667,0.6109495703227616,-0.7043008904466944,0.5451932591117038,1.2354638992456595,-0.35495082644842896,0.28296978134308537,2.076476446778688,0.6949356423135457,1.8418738307513378,1.5334070539140794,0.7533603495211348,-0.11189376142374594,-0.8419935332355505,-1.1116979895223666,0.48632893468126936,0.4681833766747926,-0.17462220803270195,0.8484663810865986,-0.6045371143431476,1.1102190681111885,0.04000706478611994,-0.03632657578056551,-0.00027329697946493073,-0.09859127678452355,2.488264288328721,-1.6115198291476032,0.1772225437817981,1.2441061893390575,0.7175130525725216,-0.3020819717072703,1.7401210242168366,-1.0684928577656814,-1.3062961297182314,0.5680705629324108,-1.454469801233026,-2.3779497529666154,0.8828866377279997,0.7613503126204363,0.7322868629434504,-0.4874711446841277:1
