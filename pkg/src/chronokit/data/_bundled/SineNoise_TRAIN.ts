@problemName SineNoise
@univariate true
@equalLength true
@seriesLength 64
@classLabel true 0 1
@data
-0.8205324264678474,-0.9458732864395453,-1.229680081927115,-0.9144161314479761,-0.7766073583096728,-0.3854587319957844,0.020660863328659046,0.4193442253247019,0.7993680338515254,1.0542572213185373,0.9843235381688281,1.02918331210969,0.5854967962357057,0.3473830035347396,0.01526025655079094,-0.4415730111855282,-0.8325549051494935,-1.0421784220001116,-1.0429495870299654,-0.8705174527077166,-0.7529780819382407,-0.33314955401260904,0.05916426062294203,0.5050587994301964,0.7796708924647466,0.9855431552782616,0.9317941435213974,0.8795756016854446,0.7304138105905001,0.4615751110475139,-0.2009933148248017,-0.2995818634877092,-0.6236174378358821,-0.8718747443042267,-0.9707314414303011,-0.9239292465083645,-0.5062141952306713,-0.1162061648804415,0.2552502486010021,0.5824846174350524,0.793943021280008,0.8291740211460523,0.9967315911512231,0.9581844585623552,0.5231801172094119,0.3517442025436389,-0.03210039213216642,-0.38136996856533156,-0.8766167768898312,-1.016176141578173,-1.0408205291775536,-1.0095171558320082,-0.4780794758713514,-0.3618230693696534,0.10798372456040953,0.4251169864142259,0.9165522680943244,1.0820419830824533,1.060512266745723,0.6721859769900567,0.6572191610103563,0.3806006156030918,0.025309395969827772,-0.5127649454323783:0
1.1744829079111936,0.7372516098018894,0.5478126009119045,0.3586704311843005,-0.1190981103132423,-0.29405489770441473,-0.7704810167170472,-1.0275223407065794,-1.0300381221016421,-0.9784093185651381,-0.7417334197320873,-0.20212428329607562,0.18212015293705391,0.6237500380130523,0.7138723568423004,1.1331136769317243,0.9635430007974947,1.0267355346876772,0.5706868183751677,0.19161710313867142,-0.09902503453990653,-0.3911488475819932,-0.7732319782967585,-1.0227558140996904,-1.126403742986028,-1.0094467282949615,-0.5636971181059394,-0.16619412904431852,0.10757411243324402,0.38685767024609685,0.8766371512304636,0.8361635372158994,0.9209749620724341,0.9313964921572286,0.3889512857359669,0.30380239212952975,-0.1821676553367233,-0.4833661863211604,-0.7969030885903762,-0.9439914921829607,-0.9228645779076607,-0.9451316818930615,-0.4718672008622331,-0.19255605347812102,0.20837683792609968,0.6107805541800414,0.8680917581388786,1.0486107997452168,0.9998411326526497,0.7266173217042456,0.6004608930897263,0.18821396835523052,-0.2662777485473176,-0.4684488769776428,-0.846187881383058,-1.067183375488503,-1.0965818795855182,-0.8424529988323293,-0.5780982081763905,-0.1329196853962145,0.12261210484336324,0.5984781319902206,0.9295594186455438,1.0792194953023266:0
0.018079466951117007,0.7281688703718139,0.897801626322439,1.0332441355727116,1.0041665982887769,0.8342727678899583,0.5357083338209712,0.0989514952122489,-0.4447733874164139,-0.616191971242214,-0.9442128103496421,-0.8828506590335882,-0.9959205071146887,-0.7876495162521812,-0.588727507356748,-0.1859050728559246,0.2534565514101552,0.45676298002511706,0.8939081369270349,0.9802597749426016,0.8484718760146275,0.5561737653231046,0.5550721251837643,0.10508442217177816,-0.3076106989006304,-0.6289159614367664,-0.6821920314094608,-0.9958470971933412,-0.9583819302162967,-0.9447043388304217,-0.33903300516012386,-0.043094027721681874,0.3613033442793324,0.6100677715726401,0.9555051043800347,1.027961683796818,1.0283627643010516,0.7807777560220528,0.35637811699153793,0.23772826084642973,-0.4481058212397851,-0.6292941655772728,-0.8842918743375403,-1.095153014385827,-0.9057315428814939,-0.8160300220038399,-0.5474537443554637,-0.08285865296834743,0.20695195352297116,0.7441984959352999,0.8989851331163055,0.9434337016039326,0.7726173589165966,0.6652217321727683,0.612449990272572,0.12978241975497742,-0.2829223641467659,-0.4409753370271994,-0.9921045499049639,-1.0494327802715124,-1.0143026241910003,-0.7373633237097531,-0.5701204316261405,-0.1961846109275146:0
-0.056855289153465785,0.5493258206234126,0.8572098527400508,0.9109335903285897,1.0109468221664386,0.7499689910637377,0.5828177177569416,0.42264791654067657,-0.09008657712833201,-0.24535453154203796,-0.8553151911042642,-0.9005428233962749,-1.014163410395619,-0.8226518186568625,-0.6307201691969074,-0.34097263230934094,0.016897974102875066,0.7829945541265168,0.7688614109161268,0.7569051960453811,0.9297527668219754,0.9470375760520711,0.579998189912557,0.4208974415169501,-0.0034198232506503085,-0.4916247438040513,-0.8238175111661538,-1.0590513657714755,-1.0646094818436411,-1.026547910806234,-0.5095594040777236,-0.12578274255581823,-0.02195415643772733,0.3582225826529813,0.5997447311798576,0.8621858419954884,0.6839791474839796,0.7650057076764796,0.7596905732110846,0.250285568321978,-0.018201227049705018,-0.5252877866058304,-0.6005291871892371,-0.93864946676732,-1.032813056826657,-0.6239912008025634,-0.6624462188595761,-0.40697515624103653,0.12385065073105672,0.47250737636581785,0.8832283722051749,0.8664078726189246,1.0750845207602584,0.9645084503971009,0.5632303040375253,0.30117722184069085,-0.18673484622047937,-0.24181007283755895,-0.8470098731165658,-1.0038787094355772,-1.1011966298086464,-0.9138457308569891,-0.6305866359007228,-0.20807390773395457:0
-0.9830653673810379,-0.7222538271473786,-0.5198567386076963,-0.07790068594187392,0.662730855666015,0.8146448889355727,0.8475783196641518,0.8662485652206979,0.8244584197145017,0.7015073453288466,0.38168058080221123,-0.07927559682782709,-0.5158075465121833,-0.5682827192412497,-0.8805521787023736,-1.0374450913303206,-0.9440828235560763,-0.7566294771927872,-0.6718123465680036,0.016405719444003944,0.2800956588688422,0.6102521398628122,0.8616944832928458,1.0732184608446569,0.8049636219336993,0.5602482853128081,0.4421930094835287,0.07059735372921386,-0.4830434706178409,-0.6542808020367982,-0.9548839668733584,-0.9698590717181711,-1.0481127307810212,-0.6203869863441369,-0.25788190655464116,0.06854686029735944,0.4429840960079329,0.3332930541538207,0.951783698738577,0.9974437577042727,0.9073121520898345,0.6406186322831185,0.38374429945764643,0.03637220377809238,-0.413528915892481,-0.7568529837370811,-0.802745342737956,-1.1105250001004396,-0.8190011829920802,-0.6859951849071682,-0.45863836649453393,-0.024158652872190524,0.29515073955720195,0.7780270216070378,0.9605109000289301,0.944308671858209,0.8117948728690456,0.7338480406303277,0.47394636265048445,-0.016223171672928888,-0.34531484974949594,-0.748123284821068,-0.9189638032309403,-1.029116580512896:0
-0.49172447415154036,-0.3058254464766393,0.29942558443458966,0.5660903970688917,0.8893389201781561,0.953907262881793,1.0040299099993646,0.7008157825390767,0.6400441296978839,-0.015506263590663094,-0.3389304135935392,-0.5655170382752598,-0.7071938848947593,-0.960125645447611,-0.9967846365898628,-0.9505810772762964,-0.540256354892051,-0.1568358962772762,0.4040633966495602,0.6512961673898012,0.7005688259203724,1.1906161851527335,0.9324928035120749,0.7201260914815384,0.6686109536577289,0.14987261914337013,-0.271746792053432,-0.5672050463356998,-0.7689892353756452,-0.888604655183449,-1.1095140310672282,-0.6082239159247971,-0.4264425296494755,-0.19276830137438217,0.1531405469634804,0.4921824021534022,0.865815957170835,0.9231366462094514,0.8955063945333022,0.8891975034461338,0.5575854228316705,0.11539106933069607,-0.16158177249708455,-0.45234578259865565,-0.9629277446761814,-1.0482674640426388,-0.8777316070399666,-0.7361780063704628,-0.498458802805239,-0.038606076417221566,0.126185359203712,0.4411698618521122,0.7668273776855288,1.000192685182018,0.8923851135524439,0.7593502473094991,0.4236286765390082,0.09280528071357713,-0.335485254014921,-0.5523370246546613,-0.7739890066148948,-1.035982869580235,-0.9927203706090222,-0.8661753202031599:0
-0.5678705374088189,-0.8647722082911556,-0.8339347483308523,-1.0713416687311488,-0.7475637532330381,-0.4421058245839421,-0.15117397237012523,0.33212595877918505,0.4771433940733942,1.0855581152380096,0.8591459930360296,1.0537751911238944,0.6717017352582206,0.6015932676717837,0.07665255261013532,-0.2579302553246895,-0.6156612834017644,-0.7636044026625985,-1.0255051833789663,-1.25851283606579,-0.8598198821585864,-0.46813373223971366,-0.15917677575806186,0.3507546311729903,0.7225283585698847,0.858900631175097,0.8443858989264227,1.1002109760679852,0.8921193531628249,0.4565858511219062,0.325958796410311,-0.30866009205017686,-0.7347076310142753,-0.8892651555401776,-0.8855670668140968,-1.0555398093216473,-0.5886914953777993,-0.5761575860058143,-0.019687727632911864,0.32821878346122624,0.6055899530141552,0.9817311100368526,0.8433705594778543,1.0975516437607145,0.7774456002551202,0.4322614395622575,0.19004736007504416,-0.16778264468098747,-0.5440161159100759,-0.6737274300605782,-0.885277830759664,-0.833443801825355,-0.8378003968697937,-0.47585258684240594,-0.058831697038483864,0.27199832237058236,0.6511591822897611,0.9162882887785336,1.0777748301328274,0.9516335759903933,0.7488340816129563,0.40367339952695397,0.025956722656809122,-0.1565274233062793:0
-1.0001654331472374,-0.8866928367555467,-0.9218261886757879,-0.6920206516489761,-0.23337998224595854,0.3754833430378184,0.7172123166508153,0.900263796976072,0.9114962693309963,0.9523070107080155,0.7623137560616196,0.46370650625552623,-0.1221361245856,-0.3466132848830892,-0.6294154602357929,-0.715417157209653,-0.9756389784338179,-0.8252984462383202,-0.8314604949174574,-0.5234726989898387,-0.5184130321513973,0.3071536802075713,0.6651141388015026,1.0434358431467998,0.9430371632677095,0.9748026904843056,0.7215370085694035,0.38057813437302995,0.057160062472267625,-0.29532049869544796,-0.4748607698005877,-0.8668387759335245,-1.07076776531378,-0.9511994920404278,-0.7703326684855084,-0.5658270464625543,-0.014147496483004118,0.07198575718920414,0.5890501098592703,0.9335665427537868,0.8578700323993069,1.0015126497289388,0.9213791090608925,0.5435709672907552,-0.040545135151728945,-0.3336401490303939,-0.4871742324171425,-0.8372264116843345,-0.9926991781959897,-0.9212672153930521,-0.7199849090409245,-0.5690503645248577,-0.15751086715325582,0.2751120112535509,0.5560088004888362,0.8537147803371385,1.1215004604651915,0.8686052883953956,0.9847560749550262,0.6861382786032572,-0.04287308465046713,-0.274922912798171,-0.5761354157030008,-0.9431470449415067:0
-0.34479245439471085,-0.6422184994892182,-0.798194140837014,-1.0441092145710846,-0.7799987617704115,-0.7568055568016033,-0.49956392265971744,0.026608599997096583,0.3333125235322731,0.6554056073845205,0.8389979112712165,1.17437439206565,1.0438503019064216,0.7654618234409855,0.3315864791831148,0.15561252269224154,-0.38505841323639584,-0.7900715249915965,-0.9000271000949454,-0.9648287204173127,-0.8344200195641066,-0.7575577745069318,-0.40870444153431174,-0.24090563903836495,0.268431186279481,0.6308980617462148,0.9583365680101599,1.0045818980194767,1.0430760387444105,0.7353830322577434,0.5251018848727026,0.1598040086414919,-0.3956619764849017,-0.6009230669589999,-0.9041482022433095,-1.1833846255379785,-0.8668274749182833,-0.821988825065887,-0.5745454000639731,-0.1560490428854312,0.28450443434106865,0.7692678782504753,0.8555186292475485,1.040216580372226,1.1000260806222002,0.8391580101628363,0.5961628099932663,0.07066638262095429,-0.19357947137883863,-0.6242745298227305,-0.7646708257992507,-1.093331787875589,-1.0406239182566976,-0.6589297997649187,-0.5089147915083242,-0.15421343318649694,0.2784416459612602,0.549527184080475,1.0053060864012247,0.8680595655087845,0.9476083430963838,0.8204982356056933,0.4788616873447311,0.03808861397926196:0
-0.4835691430546557,0.02728712282138456,0.26549956626228033,0.7608637799652984,0.7655204172657736,0.9443853669337242,0.933239476022385,0.5925943525125641,0.461931309732063,0.013398438429747682,-0.4721549794379038,-0.8481283323688339,-1.074494190767567,-0.9947802820923598,-1.0452918844920638,-0.854297506930271,-0.4198528169286249,0.21249773272460534,0.3963016474022951,0.7725313927438543,0.9392070882571667,1.0781818932162512,0.7953000087389158,0.6747583498377674,0.42286530794040783,0.013460638155200905,-0.3877469332901618,-0.7628271173680892,-0.943773563900723,-1.0773034589945256,-1.1717921752713898,-0.8372603910275846,-0.3491649294919585,0.14045547580646447,0.549905628411318,0.7059146837626635,1.0072736159747162,1.0906814676764651,0.8603829553986031,0.5480155638109656,0.39981895531488715,-0.16096777996335185,-0.4005405725744351,-0.6354278007148584,-1.059942202440303,-0.9966541382122289,-0.8056070622545054,-0.6816582994549273,-0.3444980533044348,0.07542172162097596,0.5418439184920669,0.7113818175661112,1.0408853397736164,0.9934667549716503,0.8749919922420623,0.7492916438187828,0.336148938580239,-0.04206060181595433,-0.42932167432317686,-0.9257819289471116,-0.9073853058642428,-1.1262672124649393,-0.9403357858522398,-0.572812668808541:0
-0.5210003231072904,-0.5420091584474772,1.3639093845017958,0.5463057654642988,0.9765270973526429,-0.35529123398699336,0.7480832128709275,-0.6861685891568023,-0.676001725621899,0.5962442782050664,-0.5983731712727243,0.7671185432439538,2.3916845354292984,-1.6861525369472856,-0.7522043761212451,1.1201461818426741,-0.14507816949322366,1.1610898497925723,-1.0100642731329075,0.3313441778079705,-0.15055631782284468,0.14037072287334246,0.33111601905536314,-1.2200063626559563,-1.0741374853592944,1.3992440068954228,0.29321371158095555,0.10634633295262737,-0.044074722613553316,0.3565424987061171,-1.1559367394054465,-0.9990273318953995,1.304508247206433,0.15127522184716322,0.8503008736540341,-0.6056640069212733,1.3767253803593051,0.345278405319519,0.48124581925008575,0.5487293377157805,-0.7970092393721301,-1.8657208634000604,-1.0748026670851023,1.6305228573863613,1.3006839703204864,-0.3469213679779701,-0.30167632703614505,1.0366058772358528,-0.1684098727535861,-1.2992598701307787,1.265543092596161,0.4771785779139319,-2.516339715003551,-0.3131901055298775,0.14367020328433938,0.4812468270587883,0.15215118931163515,-0.6357417972436246,-0.11575904402998716,0.29480031794360034,-0.26800408561401673,-0.37190071970620736,1.2520839386648168,-0.9466076852692522:1
-0.3494634711099121,-2.03126901304909,0.5409699634514118,0.8282644598468853,0.5484868325965845,0.9176724874612288,0.4407067447635609,0.34251539095341227,0.4739470669880134,-0.26730843195327686,1.188327862596402,-0.3485720650141568,-1.4623519251551929,0.8497836136184508,1.8507027799514817,-0.9601511192906311,-0.1016311295928566,-0.6854420107180271,-0.3805832501275168,0.04609297177965803,-1.2418084527811688,-0.2776536712672873,-1.4659673863823872,-0.568227637941478,-1.1860696539864874,-1.0590606994601444,-1.7199106806581999,1.2193545887326338,0.5090590847395515,-1.9174640434564942,-0.5968275940478756,-0.670438599903074,-0.6909441281685968,-1.4468835125564838,0.7543857213684552,-0.395863785507999,0.4681489094895136,0.5267557651664272,1.375445311670887,-1.8148722777431434,1.7386021114249555,1.2688152738912304,0.5730659923355066,2.3835922292341163,0.20497859792723128,0.8214789160702182,-0.7384139812679597,1.1343574079518282,0.16782596972241448,-0.4512001448560466,2.116939198315876,-0.3047996645408318,0.008861327608517627,-0.19727995732612844,-0.7556709132364813,0.5312724005304282,0.738409603732731,0.3543725277387253,-2.3605782614449353,1.0079970034230852,-0.3502383498230938,-1.216323411889306,0.6032809590509747,0.5628494203738629:1
-1.0430737022813366,2.472435678832565,-1.2096265493756504,-1.7330027043844558,-1.1541714262983167,1.4207998428900637,-0.17585672570351582,-0.3720566878481917,-0.06215772113332739,-0.5966139079163051,-0.6902634133270706,-0.6412154938054386,0.7079555234674223,1.0204558856716575,-1.0550925619827771,0.23922797173839117,0.7882072412490861,-1.0817519495061156,-0.5025665920171958,-1.0380641623107913,-1.2910285430172368,0.10186286879000153,-0.7361323713301251,0.631129089144547,-0.029421922615303468,0.41262735520499433,-0.29228291261987144,-0.6349973825890232,-0.09067313510678131,-0.004996130276595701,-0.7058554945166199,0.42659545511016506,0.7465948559764687,0.15808270533092642,1.7134908885015603,-0.6323390096507158,0.5205964182011031,-0.40873480052906086,0.23462950367525942,-0.8299493395820846,1.1151233773647666,0.17602090575725726,1.1922444995731674,-1.2660955768237576,-0.4935152092007745,-0.8925658002780713,-0.531941865291501,-0.6926096971858243,-0.1205409342872928,-0.017247143727842716,-0.04098486469656254,-0.5555238735118273,0.1874251778886684,0.8756154955309015,-0.9022755659889229,0.000888625001921776,-0.07407088917588163,0.46835463422376244,-0.06385858477376474,-0.015664803595005782,-0.9910957822281317,0.021703839059641333,-0.9218844892991094,0.5157042481640784:1
-0.10321893428652158,0.03985841761466474,-0.8911903670902938,0.803757579941689,0.6923139089321741,0.8615239290498078,2.2273860809131754,-0.05251938229307366,1.2034028358078068,-0.12382780642392177,0.3940872958402979,0.36533742761293553,0.2645917633584743,0.658256178520381,-0.3039363803392461,0.04093228158147673,0.5353096473418112,1.7478539000384907,-0.8423566689824117,-1.8061326203829131,-0.4840854911476985,0.08992843298078625,0.17497709320369015,0.09221778578673422,1.182790122678783,0.9760497927838799,-0.04926790495129596,-0.46954712275218685,-0.34600888138250585,-0.35630415298259815,-0.22559947382813822,-1.5726505615429949,-0.4610407436426228,-0.4248800212959662,-0.18888038569796042,-0.2543000124201234,0.6720071416275368,-0.5319433559629919,-0.4385777014308822,0.5419387546680404,-0.23531484674423206,0.2164547268456756,0.6693356983561061,0.4219694947780549,0.25016244798431597,-0.19644155767581964,0.6818941030932071,0.17554994126500043,-0.5048527510617483,-0.1508091869990102,-1.218129377322531,-0.9615559741469126,-1.8829080367785338,-0.6799313816069117,1.3355454216308837,-0.5564888399932533,0.7875408171027013,-0.0034498542228016903,-0.700548823091534,1.3382795151279085,0.5822058485731421,-1.7518005652801107,1.0414021981866897,-1.0747914952232525:1
-0.1779139465826313,0.668113421683895,-0.29985316059917977,1.1189440556172074,0.7612637605131622,-1.5768756104869754,-0.4724341564337806,0.2820737332213647,-0.574998681265042,-0.21627650618113814,0.7997849113889519,0.31678130668345533,-0.9206190351548597,0.17460636935363696,-0.6122696351098722,-1.2151923592287868,-1.1300558500020657,0.2869555371009184,-0.02811370599356217,0.005431808558425666,-1.146209047872416,-0.18392954998757557,-1.0371676077490912,-0.9263938335666286,-0.165126756790438,-1.3833904513204967,0.6692672663671115,2.486882851272909,0.45882324909073774,-1.042903138995506,-0.27118551415148473,-1.5554379435822379,-0.37761638129222136,0.5073139355693843,0.5893847661857725,-1.0317427538584325,0.29914565348662464,1.156408025005446,1.755091585099097,-0.7007948826987104,-0.8642000120792834,0.054415869120395775,-2.9280901725683814,-0.5310340011508854,-0.27097496931211884,-0.4593419875378874,-1.5838732281625223,-0.24555110772965252,-0.7766086200556818,0.7574830584581226,-0.9184748174227628,-0.28234512976124115,-0.23294792511840304,0.5675714213245197,-2.5459046003660784,-0.34062493579600056,0.7596151492736765,-0.3616882372265676,-1.5269369663879415,0.3265981725839574,0.33668690624350883,-0.2704893919573284,-1.1597957072917302,-0.7406751455270828:1
-0.3137565089364269,-0.8755328557582861,-1.9201783483529482,-0.7692867989311631,-0.06174393447177569,-0.5070600672915547,-0.07557283913840278,0.08365797896292382,0.8965755003643204,2.203824123451556,0.7317788401264059,-1.4043285465488287,-2.656944947302302,-0.09446216866931324,0.07138843525796344,-1.161873305834576,0.2720321372020745,-0.7669395878687968,0.40266973278163704,-0.32551817297182867,0.39746259072463846,-1.7431951941054324,-0.43846687509929955,-0.1485960064725456,-1.4248747250999314,1.8823382582267307,-0.5407734120955239,1.389971729008376,-0.6643420911200446,-0.22997115548100328,1.1839019117100198,0.303826845027793,0.19205435028986062,0.2659434481762174,-1.3661578762408668,-0.3895534736381311,-0.9564456538816968,0.19741365231431526,-0.5439981304035021,-0.04405912149974852,-0.07729256326094218,-0.03637038490501321,-0.0347471219115299,-0.6523781063835983,-1.0540027955565343,-0.6643563093536256,1.0715383406436483,0.3741618064648528,0.5869553605920156,1.3799679163043477,-1.1794309331731632,0.5099524214818214,-1.0750741052027453,-0.3343325988668879,0.4842398427706556,1.614345267136424,-0.7821649424751884,-0.0947962535938427,1.1562368039549173,-1.4898081193653723,0.36211291470656115,-0.3082781503978844,-0.881694971470056,0.14663082307360867:1
0.594925861846824,-0.91209976232621,0.37998978184674126,0.1733699896200973,-1.2418133060027143,1.5534128669401228,1.0899026698201453,-0.8599267478891178,-0.586630882730846,0.7707802337475681,-0.49544904738287204,-1.8397186052226187,1.048882112400727,0.008781422965773035,1.9070261909649173,0.35746712316898616,0.19099248938301286,2.8745004813941315,-0.17186734595143172,-0.9518157648768794,0.22919797956924792,1.135754903021066,-1.1651201441864287,-0.9082651093054563,0.4497770983764295,-3.197345391683628,-1.0926786579823062,0.7954840824420695,-0.5867399161530961,-1.6264831326910547,1.9255666584293065,-1.4105351572732683,-0.523365546959906,-0.3727314992906954,0.08314439397770138,-0.3695052019039484,-0.08096507856710995,0.05749457907590979,-0.08667642876642286,0.09327384069324166,-2.3789256878163596,0.4410646977675636,-1.4044566979810365,-2.1666455112290612,1.3813479064912069,-1.2855152791991058,0.17986910595420905,-0.7725614870648787,-0.6784662158704471,0.4836547685821585,-1.0482249591915083,0.3726742754149822,0.3806924762430092,1.164447913936147,-0.33621322049705094,1.0465822533642106,1.7206947067420648,1.5866822794204654,0.5860769567913948,0.44916607192900415,2.8494549607259407,2.2321759587975563,-0.7666172841087739,0.9236090362782893:1
0.601959232063568,0.07226746149832086,0.15331229812215103,0.4877851124623137,0.9373584773295993,0.2187698616516345,0.339793714559767,1.392140314142641,0.31772024342736876,0.5450224817130815,0.9902300965794345,1.6332624160584217,1.2270409292003972,0.37721495282689266,0.20781545397606396,-1.2236035778514136,0.29206254410355154,-1.0371697599458227,-1.0240394415157577,0.6505089274690512,-0.10057718357575464,0.4722094960293684,-0.6269631173779989,1.201204007476163,0.14377218005623457,1.1877283270336183,0.6734404901818256,0.16524903859866213,-0.47852741111072156,0.03150757764886403,0.8280104854866206,0.6976577341539597,-1.1955846525037421,1.0256820527459456,-0.2139079414751082,0.8152637210038772,-0.6974882614105615,0.6378552876565751,-0.7965918828262021,0.12935683165923514,-0.2980298067196495,-0.2855725668594085,-0.5665872435909065,-0.15357909625050895,-1.7406346901674916,0.8765996934014191,0.9616865870883877,-0.4427738728469823,-1.3797546259079334,-0.6467092698202764,0.9476143296978757,0.6255207733817739,-0.30035356091877463,0.8972747801405839,-1.0414807563325195,-0.6126363310909915,0.47460724668348964,-0.09591332970445857,-0.5892256991552035,-2.5121277305114025,0.6712163346120159,0.3237218133973122,-1.7429223285514202,0.6003256861085275:1
-0.014363758758586748,0.27883477737431556,0.9451932065760001,-0.7398868049493273,0.7135642142391335,0.6838541519834499,0.7615157392601775,1.635955778306173,0.6587348427546967,-0.5615577103391871,1.798384420138548,-1.1073125456047812,-0.4627235943580139,-0.964469711004393,-0.1027607995418483,1.0822192832103554,1.297785956840585,0.46351741580390327,-0.6093910635812475,-0.5536205981505344,-0.6031961366575651,0.9528406823236886,-0.9065393256103157,0.8645262754121827,-0.03259407162425542,0.1720510724519307,1.5117183839006723,-0.4753340140573231,1.661728596147394,-1.4094526593736707,-0.824763693936503,-1.5783914031016368,-0.7467818840498868,0.5828820972117233,0.7377290649636312,0.3067753034739905,0.26709196166534926,-1.1733269767074714,-1.3268318329262696,0.30389000748699874,1.3478069773059966,-0.3641347603647214,-1.268559616590313,-1.533280477749828,-0.6806517146139357,1.5795438221690692,-0.20773953753241156,-1.037943374056448,-0.6094708441644298,-0.4835449713031524,0.2656134152217038,-0.6600164535755245,-0.88993957467117,-0.18801698454297686,0.46867032459622227,0.71704376792885,0.550532016267197,-0.4574969296706332,-1.6950770180267947,-0.7985161428769869,0.2840813932760513,-1.3336352855099138,0.2526192229828111,-0.5899759491773432:1
-0.5821639535030836,1.119507008022189,0.21873262987857625,1.3702561728264784,-0.9392529879627134,1.1307411921308461,0.9090804102421112,-2.9950027798647287,-0.0882707117695446,1.5422244089235955,0.7780573811679959,-0.44132115656795384,-0.2327903906718245,-1.3030487812371978,0.20629249006022807,-1.7931720812254517,-1.0153067439861525,1.1191643604654822,-0.02056504387532332,-0.3634260488797557,-0.10591112305144375,2.741894012487202,1.0351879907581838,-0.7756413745956193,1.6667497504903537,-0.08879493790855504,0.7397169333609636,-0.5866304527666428,-0.9378559883180094,0.8019126612557663,-0.7688867493664763,-0.7813181154981489,0.8978342991592051,-1.162069029694606,-1.4192520017477464,0.5450543963499954,-1.959881624692813,-0.7517256566679622,-0.3656461120005291,-1.3453069899370451,-1.1173905214054018,0.6658729284349504,0.2924530661220612,-0.9457114683003488,0.5294855660350913,1.519278441010666,-1.28241780993394,0.061255794842068084,1.97665134753273,0.611159889048419,0.8133851241006896,-0.2001526705001544,-0.7979637561376178,1.1433716948773616,0.6537249441620315,-0.05152318523520336,-0.46533572482333047,-1.7477252284191138,0.15590622911900587,-0.6917127645637496,-0.13185426838104947,0.6709753842534179,0.8200027057036074,0.7190009690459168:1
