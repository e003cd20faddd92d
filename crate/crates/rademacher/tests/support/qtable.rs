// Reference values of the standard normal upper tail Q(x),
// computed independently with 40-digit complementary-error-function
// arithmetic at the exact double arguments, rounded to nearest double.
pub const Q_TABLE: &[(f64, f64)] = &[
    (-4.0, 0.9999683287581669),
    (-3.99, 0.9999669633523706),
    (-3.98, 0.999965542365885),
    (-3.97, 0.9999640636840972),
    (-3.96, 0.999962525118309),
    (-3.95, 0.9999609244034022),
    (-3.94, 0.9999592591954415),
    (-3.93, 0.9999575270692113),
    (-3.92, 0.9999557255156879),
    (-3.91, 0.9999538519394437),
    (-3.9, 0.9999519036559824),
    (-3.89, 0.9999498778890038),
    (-3.88, 0.9999477717675982),
    (-3.87, 0.9999455823233663),
    (-3.86, 0.9999433064874658),
    (-3.85, 0.999940941087581),
    (-3.84, 0.9999384828448168),
    (-3.83, 0.9999359283705112),
    (-3.82, 0.9999332741629703),
    (-3.81, 0.9999305166041201),
    (-3.8, 0.9999276519560749),
    (-3.79, 0.9999246763576213),
    (-3.78, 0.9999215858206164),
    (-3.77, 0.9999183762262973),
    (-3.76, 0.999915043321502),
    (-3.75, 0.9999115827147992),
    (-3.74, 0.9999079898725259),
    (-3.73, 0.9999042601147311),
    (-3.72, 0.999900388611024),
    (-3.71, 0.999896370376326),
    (-3.7, 0.9998922002665226),
    (-3.69, 0.9998878729740177),
    (-3.68, 0.9998833830231846),
    (-3.67, 0.9998787247657146),
    (-3.66, 0.9998738923758616),
    (-3.65, 0.9998688798455795),
    (-3.64, 0.9998636809795542),
    (-3.63, 0.9998582893901242),
    (-3.62, 0.9998526984920926),
    (-3.61, 0.9998469014974263),
    (-3.6, 0.9998408914098424),
    (-3.59, 0.9998346610192799),
    (-3.58, 0.9998282028962541),
    (-3.57, 0.9998215093860952),
    (-3.56, 0.9998145726030667),
    (-3.55, 0.9998073844243643),
    (-3.54, 0.9997999364839927),
    (-3.53, 0.9997922201665194),
    (-3.52, 0.9997842266007053),
    (-3.51, 0.999775946653009),
    (-3.5, 0.9997673709209645),
    (-3.49, 0.9997584897264321),
    (-3.48, 0.9997492931087195),
    (-3.47, 0.9997397708175725),
    (-3.46, 0.9997299123060365),
    (-3.45, 0.9997197067231838),
    (-3.44, 0.9997091429067092),
    (-3.43, 0.9996982093753913),
    (-3.42, 0.9996868943214188),
    (-3.41, 0.9996751856025812),
    (-3.4, 0.9996630707343231),
    (-3.39, 0.999650536881662),
    (-3.38, 0.9996375708509669),
    (-3.37, 0.9996241590816),
    (-3.36, 0.999610287637418),
    (-3.35, 0.999595942198136),
    (-3.34, 0.9995811080505497),
    (-3.33, 0.9995657700796183),
    (-3.32, 0.9995499127594079),
    (-3.31, 0.9995335201438924),
    (-3.3, 0.9995165758576162),
    (-3.29, 0.9994990630862143),
    (-3.28, 0.999480964566793),
    (-3.27, 0.9994622625781703),
    (-3.26, 0.9994429389309754),
    (-3.25, 0.9994229749576092),
    (-3.24, 0.9994023515020656),
    (-3.23, 0.9993810489096132),
    (-3.22, 0.9993590470163399),
    (-3.21, 0.9993363251385601),
    (-3.2, 0.9993128620620841),
    (-3.19, 0.9992886360313546),
    (-3.18, 0.9992636247384461),
    (-3.17, 0.9992378053119327),
    (-3.16, 0.9992111543056245),
    (-3.15, 0.9991836476871714),
    (-3.14, 0.9991552608265414),
    (-3.13, 0.9991259684843684),
    (-3.12, 0.9990957448001777),
    (-3.11, 0.9990645632804859),
    (-3.1, 0.9990323967867817),
    (-3.09, 0.9989992175233859),
    (-3.08, 0.9989649970251971),
    (-3.07, 0.9989297061453211),
    (-3.06, 0.9988933150425907),
    (-3.05, 0.9988557931689773),
    (-3.04, 0.9988171092568956),
    (-3.03, 0.9987772313064077),
    (-3.02, 0.9987361265723277),
    (-3.01, 0.9986937615512306),
    (-3.0, 0.9986501019683699),
    (-2.99, 0.9986051127645077),
    (-2.98, 0.99855875808266),
    (-2.97, 0.9985110012547626),
    (-2.96, 0.998461804788262),
    (-2.95, 0.9984111303526352),
    (-2.94, 0.998358938765843),
    (-2.93, 0.9983051899807227),
    (-2.92, 0.9982498430713239),
    (-2.91, 0.9981928562191936),
    (-2.9, 0.998134186699616),
    (-2.89, 0.9980737908678121),
    (-2.88, 0.9980116241451057),
    (-2.87, 0.9979476410050603),
    (-2.86, 0.9978817949595954),
    (-2.85, 0.9978140385450868),
    (-2.84, 0.9977443233084576),
    (-2.83, 0.9976725997932685),
    (-2.82, 0.9975988175258107),
    (-2.81, 0.9975229250012141),
    (-2.8, 0.997444869669572),
    (-2.79, 0.9973645979220951),
    (-2.78, 0.9972820550772987),
    (-2.77, 0.997197185367235),
    (-2.76, 0.9971099319237738),
    (-2.75, 0.9970202367649454),
    (-2.74, 0.9969280407813496),
    (-2.73, 0.9968332837226422),
    (-2.72, 0.9967359041841087),
    (-2.71, 0.9966358395933308),
    (-2.7, 0.9965330261969594),
    (-2.69, 0.9964273990476002),
    (-2.68, 0.996318891990825),
    (-2.67, 0.9962074376523146),
    (-2.66, 0.9960929674251472),
    (-2.65, 0.9959754114572417),
    (-2.64, 0.9958546986389639),
    (-2.63, 0.9957307565909106),
    (-2.62, 0.9956035116518787),
    (-2.61, 0.9954728888670327),
    (-2.6, 0.9953388119762813),
    (-2.59, 0.9952012034028738),
    (-2.58, 0.9950599842422293),
    (-2.57, 0.994915074251009),
    (-2.56, 0.9947663918364442),
    (-2.55, 0.9946138540459333),
    (-2.54, 0.9944573765569173),
    (-2.53, 0.9942968736670493),
    (-2.52, 0.9941322582846674),
    (-2.51, 0.9939634419195873),
    (-2.5, 0.9937903346742238),
    (-2.49, 0.9936128452350568),
    (-2.48, 0.9934308808644532),
    (-2.47, 0.9932443473928594),
    (-2.46, 0.9930531492113757),
    (-2.45, 0.9928571892647285),
    (-2.44, 0.9926563690446516),
    (-2.43, 0.9924505885836908),
    (-2.42, 0.9922397464494463),
    (-2.41, 0.9920237397392663),
    (-2.4, 0.9918024640754038),
    (-2.39, 0.9915758136006543),
    (-2.38, 0.9913436809744834),
    (-2.37, 0.9911059573696632),
    (-2.36, 0.9908625324694273),
    (-2.35, 0.9906132944651614),
    (-2.34, 0.9903581300546417),
    (-2.33, 0.9900969244408357),
    (-2.32, 0.9898295613312803),
    (-2.31, 0.989555922938049),
    (-2.3, 0.9892758899783242),
    (-2.29, 0.9889893416755886),
    (-2.28, 0.9886961557614472),
    (-2.27, 0.9883962084780965),
    (-2.26, 0.988089374581453),
    (-2.25, 0.9877755273449553),
    (-2.24, 0.9874545385640534),
    (-2.23, 0.987126278561398),
    (-2.22, 0.9867906161927438),
    (-2.21, 0.98644741885358),
    (-2.2, 0.9860965524865014),
    (-2.19, 0.9857378815893312),
    (-2.18, 0.9853712692240107),
    (-2.17, 0.9849965770262678),
    (-2.16, 0.9846136652160745),
    (-2.15, 0.9842223926089095),
    (-2.14, 0.9838226166278339),
    (-2.13, 0.983414193316395),
    (-2.12, 0.9829969773523672),
    (-2.11, 0.9825708220623429),
    (-2.1, 0.9821355794371834),
    (-2.09, 0.981691100148341),
    (-2.08, 0.9812372335650622),
    (-2.07, 0.9807738277724827),
    (-2.06, 0.9803007295906231),
    (-2.05, 0.9798177845942956),
    (-2.04, 0.9793248371339299),
    (-2.03, 0.9788217303573277),
    (-2.02, 0.9783083062323532),
    (-2.01, 0.9777844055705686),
    (-2.0, 0.9772498680518208),
    (-1.99, 0.9767045322497881),
    (-1.98, 0.9761482356584915),
    (-1.97, 0.9755808147197774),
    (-1.96, 0.9750021048517795),
    (-1.95, 0.9744119404783613),
    (-1.94, 0.9738101550595473),
    (-1.93, 0.973196581122945),
    (-1.92, 0.9725710502961632),
    (-1.91, 0.9719333933402274),
    (-1.9, 0.9712834401839981),
    (-1.89, 0.9706210199595906),
    (-1.88, 0.9699459610388002),
    (-1.87, 0.9692580910705341),
    (-1.86, 0.9685572370192473),
    (-1.85, 0.9678432252043863),
    (-1.84, 0.9671158813408361),
    (-1.83, 0.9663750305803717),
    (-1.82, 0.9656204975541101),
    (-1.81, 0.9648521064159612),
    (-1.8, 0.9640696808870742),
    (-1.79, 0.9632730443012737),
    (-1.78, 0.9624620196514833),
    (-1.77, 0.9616364296371288),
    (-1.76, 0.9607960967125173),
    (-1.75, 0.9599408431361829),
    (-1.74, 0.9590704910211927),
    (-1.73, 0.9581848623864051),
    (-1.72, 0.957283779208671),
    (-1.71, 0.9563670634759681),
    (-1.7, 0.955434537241457),
    (-1.69, 0.9544860226784502),
    (-1.68, 0.9535213421362799),
    (-1.67, 0.9525403181970526),
    (-1.66, 0.9515427737332772),
    (-1.65, 0.9505285319663519),
    (-1.64, 0.9494974165258963),
    (-1.63, 0.9484492515099107),
    (-1.62, 0.9473838615457479),
    (-1.61, 0.9463010718518803),
    (-1.6, 0.945200708300442),
    (-1.59, 0.9440825974805306),
    (-1.58, 0.9429465667622458),
    (-1.57, 0.9417924443614469),
    (-1.56, 0.940620059405207),
    (-1.55, 0.939429241997941),
    (-1.54, 0.9382198232881881),
    (-1.53, 0.9369916355360216),
    (-1.52, 0.9357445121810641),
    (-1.51, 0.9344782879110834),
    (-1.5, 0.9331927987311419),
    (-1.49, 0.9318878820332746),
    (-1.48, 0.9305633766666683),
    (-1.47, 0.9292191230083144),
    (-1.46, 0.9278549630341062),
    (-1.45, 0.9264707403903516),
    (-1.44, 0.925066300465673),
    (-1.43, 0.9236414904632609),
    (-1.42, 0.9221961594734536),
    (-1.41, 0.9207301585466076),
    (-1.4, 0.9192433407662289),
    (-1.39, 0.917735561322331),
    (-1.38, 0.9162066775849858),
    (-1.37, 0.9146565491780331),
    (-1.36, 0.913085038052915),
    (-1.35, 0.9114920085625979),
    (-1.34, 0.9098773275355475),
    (-1.33, 0.9082408643497192),
    (-1.32, 0.9065824910065282),
    (-1.31, 0.904902082204761),
    (-1.3, 0.9031995154143897),
    (-1.29, 0.9014746709502521),
    (-1.28, 0.8997274320455579),
    (-1.27, 0.8979576849251809),
    (-1.26, 0.8961653188786997),
    (-1.25, 0.8943502263331448),
    (-1.24, 0.8925123029254131),
    (-1.23, 0.890651447574308),
    (-1.22, 0.8887675625521654),
    (-1.21, 0.8868605535560227),
    (-1.2, 0.8849303297782917),
    (-1.19, 0.8829768039768913),
    (-1.18, 0.8809998925447993),
    (-1.17, 0.8789995155789818),
    (-1.16, 0.8769755969486566),
    (-1.15, 0.8749280643628498),
    (-1.14, 0.8728568494372018),
    (-1.13, 0.8707618877599822),
    (-1.12, 0.8686431189572693),
    (-1.11, 0.8665004867572528),
    (-1.1, 0.8643339390536173),
    (-1.09, 0.8621434279679645),
    (-1.08, 0.8599289099112309),
    (-1.07, 0.8576903456440608),
    (-1.06, 0.8554277003360904),
    (-1.05, 0.8531409436241041),
    (-1.04, 0.8508300496690185),
    (-1.03, 0.8484949972116563),
    (-1.02, 0.8461357696272651),
    (-1.01, 0.8437523549787455),
    (-1.0, 0.8413447460685429),
    (-0.99, 0.8389129404891691),
    (-0.98, 0.8364569406723077),
    (-0.97, 0.8339767539364704),
    (-0.96, 0.8314723925331622),
    (-0.95, 0.8289438736915182),
    (-0.94, 0.8263912196613754),
    (-0.93, 0.823814457754742),
    (-0.92, 0.8212136203856283),
    (-0.91, 0.8185887451082028),
    (-0.9, 0.8159398746532405),
    (-0.89, 0.8132670569628274),
    (-0.88, 0.8105703452232879),
    (-0.87, 0.8078497978963038),
    (-0.86, 0.8051054787481916),
    (-0.85, 0.8023374568773076),
    (-0.84, 0.7995458067395503),
    (-0.83, 0.7967306081719315),
    (-0.82, 0.7938919464141869),
    (-0.81, 0.7910299121283985),
    (-0.8, 0.7881446014166034),
    (-0.79, 0.7852361158363629),
    (-0.78, 0.7823045624142668),
    (-0.77, 0.7793500536573504),
    (-0.76, 0.7763727075624006),
    (-0.75, 0.7733726476231318),
    (-0.74, 0.7703500028352094),
    (-0.73, 0.7673049076991025),
    (-0.72, 0.7642375022207488),
    (-0.71, 0.7611479319100133),
    (-0.7, 0.758036347776927),
    (-0.69, 0.7549029063256906),
    (-0.68, 0.7517477695464295),
    (-0.67, 0.7485711049046899),
    (-0.66, 0.7453730853286639),
    (-0.65, 0.7421538891941353),
    (-0.64, 0.7389137003071384),
    (-0.63, 0.7356527078843225),
    (-0.62, 0.732371106531017),
    (-0.61, 0.7290690962169943),
    (-0.6, 0.7257468822499265),
    (-0.59, 0.7224046752465351),
    (-0.58, 0.7190426911014356),
    (-0.57, 0.7156611509536759),
    (-0.56, 0.712260281150973),
    (-0.55, 0.7088403132116536),
    (-0.54, 0.705401483784302),
    (-0.53, 0.7019440346051236),
    (-0.52, 0.6984682124530338),
    (-0.51, 0.6949742691024806),
    (-0.5, 0.6914624612740131),
    (-0.49, 0.6879330505826095),
    (-0.48, 0.6843863034837774),
    (-0.47, 0.6808224912174442),
    (-0.46, 0.6772418897496523),
    (-0.45, 0.67364477971208),
    (-0.44, 0.6700314463394064),
    (-0.43, 0.6664021794045423),
    (-0.42, 0.6627572731517505),
    (-0.41, 0.6590970262276774),
    (-0.4, 0.6554217416103242),
    (-0.39, 0.6517317265359824),
    (-0.38, 0.6480272924241628),
    (-0.37, 0.6443087548005467),
    (-0.36, 0.6405764332179913),
    (-0.35, 0.6368306511756191),
    (-0.34, 0.6330717360360281),
    (-0.33, 0.6293000189406536),
    (-0.32, 0.6255158347233201),
    (-0.31, 0.6217195218220193),
    (-0.3, 0.6179114221889527),
    (-0.29, 0.6140918811988774),
    (-0.28, 0.6102612475557972),
    (-0.27, 0.6064198731980395),
    (-0.26, 0.6025681132017605),
    (-0.25, 0.5987063256829237),
    (-0.24, 0.5948348716977958),
    (-0.23, 0.5909541151420059),
    (-0.22, 0.5870644226482146),
    (-0.21, 0.5831661634824423),
    (-0.2, 0.579259709439103),
    (-0.19, 0.5753454347347955),
    (-0.18, 0.5714237159009007),
    (-0.17, 0.5674949316750384),
    (-0.16, 0.5635594628914329),
    (-0.15, 0.5596176923702425),
    (-0.14, 0.5556700048059064),
    (-0.13, 0.5517167866545611),
    (-0.12, 0.5477584260205839),
    (-0.11, 0.5437953125423168),
    (-0.1, 0.539827837277029),
    (-0.09, 0.5358563925851721),
    (-0.08, 0.5318813720139873),
    (-0.07, 0.5279031701805211),
    (-0.06, 0.5239221826541068),
    (-0.05, 0.5199388058383725),
    (-0.04, 0.5159534368528308),
    (-0.03, 0.5119664734141126),
    (-0.02, 0.5079783137169019),
    (-0.01, 0.5039893563146316),
    (0.0, 0.5),
    (0.01, 0.4960106436853684),
    (0.02, 0.492021686283098),
    (0.03, 0.48803352658588733),
    (0.04, 0.48404656314716926),
    (0.05, 0.4800611941616275),
    (0.06, 0.47607781734589316),
    (0.07, 0.47209682981947887),
    (0.08, 0.4681186279860126),
    (0.09, 0.4641436074148279),
    (0.1, 0.460172162722971),
    (0.11, 0.4562046874576832),
    (0.12, 0.45224157397941617),
    (0.13, 0.44828321334543886),
    (0.14, 0.44432999519409355),
    (0.15, 0.4403823076297575),
    (0.16, 0.4364405371085672),
    (0.17, 0.4325050683249616),
    (0.18, 0.42857628409909926),
    (0.19, 0.42465456526520456),
    (0.2, 0.42074029056089696),
    (0.21, 0.4168338365175577),
    (0.22, 0.4129355773517854),
    (0.23, 0.40904588485799415),
    (0.24, 0.40516512830220414),
    (0.25, 0.4012936743170763),
    (0.26, 0.3974318867982395),
    (0.27, 0.3935801268019605),
    (0.28, 0.3897387524442028),
    (0.29, 0.3859081188011227),
    (0.3, 0.3820885778110474),
    (0.31, 0.3782804781779807),
    (0.32, 0.37448416527668),
    (0.33, 0.3706999810593465),
    (0.34, 0.36692826396397193),
    (0.35, 0.36316934882438096),
    (0.36, 0.35942356678200876),
    (0.37, 0.3556912451994533),
    (0.38, 0.3519727075758372),
    (0.39, 0.3482682734640176),
    (0.4, 0.3445782583896758),
    (0.41, 0.34090297377232265),
    (0.42, 0.3372427268482495),
    (0.43, 0.3335978205954577),
    (0.44, 0.3299685536605937),
    (0.45, 0.32635522028792),
    (0.46, 0.3227581102503477),
    (0.47, 0.3191775087825558),
    (0.48, 0.3156136965162226),
    (0.49, 0.31206694941739055),
    (0.5, 0.3085375387259869),
    (0.51, 0.3050257308975194),
    (0.52, 0.3015317875469662),
    (0.53, 0.29805596539487644),
    (0.54, 0.29459851621569805),
    (0.55, 0.29115968678834636),
    (0.56, 0.287739718849027),
    (0.57, 0.28433884904632417),
    (0.58, 0.28095730889856435),
    (0.59, 0.27759532475346493),
    (0.6, 0.2742531177500736),
    (0.61, 0.2709309037830057),
    (0.62, 0.26762889346898305),
    (0.63, 0.26434729211567753),
    (0.64, 0.26108629969286157),
    (0.65, 0.2578461108058647),
    (0.66, 0.25462691467133614),
    (0.67, 0.2514288950953101),
    (0.68, 0.2482522304535705),
    (0.69, 0.24509709367430949),
    (0.7, 0.24196365222307303),
    (0.71, 0.23885206808998674),
    (0.72, 0.23576249777925118),
    (0.73, 0.23269509230089744),
    (0.74, 0.2296499971647906),
    (0.75, 0.2266273523768682),
    (0.76, 0.22362729243759943),
    (0.77, 0.22064994634264962),
    (0.78, 0.21769543758573312),
    (0.79, 0.21476388416363712),
    (0.8, 0.21185539858339666),
    (0.81, 0.20897008787160157),
    (0.82, 0.2061080535858131),
    (0.83, 0.2032693918280684),
    (0.84, 0.20045419326044966),
    (0.85, 0.19766254312269238),
    (0.86, 0.19489452125180837),
    (0.87, 0.19215020210369618),
    (0.88, 0.18942965477671214),
    (0.89, 0.1867329430371726),
    (0.9, 0.18406012534675947),
    (0.91, 0.18141125489179724),
    (0.92, 0.17878637961437172),
    (0.93, 0.1761855422452579),
    (0.94, 0.1736087803386246),
    (0.95, 0.17105612630848183),
    (0.96, 0.16852760746683781),
    (0.97, 0.1660232460635296),
    (0.98, 0.16354305932769236),
    (0.99, 0.1610870595108309),
    (1.0, 0.15865525393145705),
    (1.01, 0.1562476450212546),
    (1.02, 0.15386423037273486),
    (1.03, 0.1515050027883437),
    (1.04, 0.1491699503309814),
    (1.05, 0.14685905637589594),
    (1.06, 0.14457229966390958),
    (1.07, 0.1423096543559392),
    (1.08, 0.14007109008876903),
    (1.09, 0.13785657203203547),
    (1.1, 0.13566606094638264),
    (1.11, 0.1334995132427472),
    (1.12, 0.1313568810427307),
    (1.13, 0.12923811224001786),
    (1.14, 0.1271431505627983),
    (1.15, 0.12507193563715027),
    (1.16, 0.12302440305134339),
    (1.17, 0.12100048442101821),
    (1.18, 0.11900010745520072),
    (1.19, 0.11702319602310873),
    (1.2, 0.11506967022170828),
    (1.21, 0.11313944644397729),
    (1.22, 0.1112324374478346),
    (1.23, 0.10934855242569194),
    (1.24, 0.10748769707458691),
    (1.25, 0.10564977366685525),
    (1.26, 0.1038346811213004),
    (1.27, 0.10204231507481915),
    (1.28, 0.10027256795444209),
    (1.29, 0.09852532904974783),
    (1.3, 0.09680048458561033),
    (1.31, 0.09509791779523903),
    (1.32, 0.0934175089934718),
    (1.33, 0.09175913565028082),
    (1.34, 0.09012267246445245),
    (1.35, 0.08850799143740203),
    (1.36, 0.086914961947085),
    (1.37, 0.08534345082196695),
    (1.38, 0.08379332241501428),
    (1.39, 0.08226443867766896),
    (1.4, 0.08075665923377107),
    (1.41, 0.0792698414533924),
    (1.42, 0.0778038405265464),
    (1.43, 0.0763585095367391),
    (1.44, 0.07493369953432705),
    (1.45, 0.07352925960964836),
    (1.46, 0.07214503696589378),
    (1.47, 0.07078087699168553),
    (1.48, 0.06943662333333173),
    (1.49, 0.06811211796672545),
    (1.5, 0.06680720126885807),
    (1.51, 0.0655217120889165),
    (1.52, 0.06425548781893584),
    (1.53, 0.06300836446397842),
    (1.54, 0.06178017671181189),
    (1.55, 0.06057075800205901),
    (1.56, 0.059379940594793026),
    (1.57, 0.05820755563855301),
    (1.58, 0.05705343323775422),
    (1.59, 0.05591740251946943),
    (1.6, 0.05479929169955798),
    (1.61, 0.0536989281481197),
    (1.62, 0.052616138454252045),
    (1.63, 0.05155074849008937),
    (1.64, 0.050502583474103725),
    (1.65, 0.0494714680336481),
    (1.66, 0.04845722626672282),
    (1.67, 0.04745968180294733),
    (1.68, 0.04647865786372005),
    (1.69, 0.045513977321549805),
    (1.7, 0.04456546275854304),
    (1.71, 0.043632936524031905),
    (1.72, 0.04271622079132894),
    (1.73, 0.04181513761359495),
    (1.74, 0.040929508978807365),
    (1.75, 0.04005915686381709),
    (1.76, 0.039203903287482654),
    (1.77, 0.03836357036287123),
    (1.78, 0.03753798034851679),
    (1.79, 0.0367269556987263),
    (1.8, 0.0359303191129258),
    (1.81, 0.035147893584038796),
    (1.82, 0.03437950244588999),
    (1.83, 0.03362496941962833),
    (1.84, 0.03288411865916388),
    (1.85, 0.032156774795613706),
    (1.86, 0.0314427629807527),
    (1.87, 0.030741908929465954),
    (1.88, 0.030054038961199795),
    (1.89, 0.029378980040409435),
    (1.9, 0.028716559816001807),
    (1.91, 0.028066606659772512),
    (1.92, 0.027428949703836823),
    (1.93, 0.026803418877054966),
    (1.94, 0.026189844940452695),
    (1.95, 0.025588059521638628),
    (1.96, 0.024997895148220435),
    (1.97, 0.024419185280222546),
    (1.98, 0.02385176434150852),
    (1.99, 0.023295467750211823),
    (2.0, 0.02275013194817921),
    (2.01, 0.022215594429431485),
    (2.02, 0.021691693767646784),
    (2.03, 0.021178269642672276),
    (2.04, 0.020675162866070053),
    (2.05, 0.02018221540570441),
    (2.06, 0.0196992704093769),
    (2.07, 0.019226172227517296),
    (2.08, 0.01876276643493775),
    (2.09, 0.01830889985165897),
    (2.1, 0.017864420562816553),
    (2.11, 0.01742917793765709),
    (2.12, 0.017003022647632798),
    (2.13, 0.016585806683605018),
    (2.14, 0.016177383372166093),
    (2.15, 0.015777607391090513),
    (2.16, 0.015386334783925447),
    (2.17, 0.015003422973732205),
    (2.18, 0.014628730775989255),
    (2.19, 0.014262118410668876),
    (2.2, 0.013903447513498604),
    (2.21, 0.013552581146419983),
    (2.22, 0.013209383807256274),
    (2.23, 0.012873721438602022),
    (2.24, 0.012545461435946561),
    (2.25, 0.012224472655044703),
    (2.26, 0.011910625418547071),
    (2.27, 0.011603791521903535),
    (2.28, 0.011303844238552798),
    (2.29, 0.011010658324411386),
    (2.3, 0.01072411002167581),
    (2.31, 0.010444077061951084),
    (2.32, 0.01017043866871968),
    (2.33, 0.00990307555916425),
    (2.34, 0.009641869945358336),
    (2.35, 0.009386705534838575),
    (2.36, 0.009137467530572674),
    (2.37, 0.008894042630336775),
    (2.38, 0.00865631902551655),
    (2.39, 0.008424186399345689),
    (2.4, 0.008197535924596131),
    (2.41, 0.007976260260733727),
    (2.42, 0.007760253550553646),
    (2.43, 0.007549411416309205),
    (2.44, 0.0073436309553483485),
    (2.45, 0.007142810735271415),
    (2.46, 0.006946850788624316),
    (2.47, 0.006755652607140648),
    (2.48, 0.006569119135546763),
    (2.49, 0.006387154764943173),
    (2.5, 0.006209665325776135),
    (2.51, 0.0060365580804126635),
    (2.52, 0.005867741715332563),
    (2.53, 0.005703126332950699),
    (2.54, 0.005542623443082604),
    (2.55, 0.00538614595406669),
    (2.56, 0.0052336081635557885),
    (2.57, 0.005084925748991041),
    (2.58, 0.004940015757770645),
    (2.59, 0.004798796597126183),
    (2.6, 0.004661188023718749),
    (2.61, 0.004527111132967325),
    (2.62, 0.004396488348121312),
    (2.63, 0.0042692434090893525),
    (2.64, 0.00414530136103604),
    (2.65, 0.004024588542758309),
    (2.66, 0.003907032574852777),
    (2.67, 0.00379256234768549),
    (2.68, 0.0036811080091749804),
    (2.69, 0.00357260095239974),
    (2.7, 0.0034669738030406664),
    (2.71, 0.0033641604066691937),
    (2.72, 0.0032640958158913105),
    (2.73, 0.003166716277357795),
    (2.74, 0.003071959218650491),
    (2.75, 0.002979763235054557),
    (2.76, 0.002890068076226148),
    (2.77, 0.002802814632765028),
    (2.78, 0.0027179449227012604),
    (2.79, 0.0026354020779049523),
    (2.8, 0.0025551303304279342),
    (2.81, 0.002477074998785861),
    (2.82, 0.002401182474189253),
    (2.83, 0.002327400206731554),
    (2.84, 0.0022556766915423237),
    (2.85, 0.00218596145491324),
    (2.86, 0.002118205040404621),
    (2.87, 0.002052358994939753),
    (2.88, 0.0019883758548943256),
    (2.89, 0.00192620913218786),
    (2.9, 0.0018658133003840384),
    (2.91, 0.0018071437808064282),
    (2.92, 0.0017501569286761003),
    (2.93, 0.0016948100192772616),
    (2.94, 0.0016410612341569975),
    (2.95, 0.0015888696473648676),
    (2.96, 0.0015381952117380587),
    (2.97, 0.001488998745237465),
    (2.98, 0.001441241917340015),
    (2.99, 0.0013948872354922494),
    (3.0, 0.0013498980316300946),
    (3.01, 0.0013062384487694686),
    (3.02, 0.0012638734276722984),
    (3.03, 0.001222768693592261),
    (3.04, 0.0011828907431044066),
    (3.05, 0.0011442068310226997),
    (3.06, 0.0011066849574092466),
    (3.07, 0.0010702938546789248),
    (3.08, 0.0010350029748028415),
    (3.09, 0.0010007824766140108),
    (3.1, 0.0009676032132183566),
    (3.11, 0.0009354367195141),
    (3.12, 0.0009042551998223396),
    (3.13, 0.0008740315156315674),
    (3.14, 0.0008447391734586271),
    (3.15, 0.0008163523128285624),
    (3.16, 0.000788845694375573),
    (3.17, 0.0007621946880672352),
    (3.18, 0.0007363752615539305),
    (3.19, 0.0007113639686453642),
    (3.2, 0.0006871379379158481),
    (3.21, 0.0006636748614399678),
    (3.22, 0.0006409529836600558),
    (3.23, 0.000618951090386835),
    (3.24, 0.0005976484979344153),
    (3.25, 0.000577025042390767),
    (3.26, 0.000557061069024622),
    (3.27, 0.000537737421829695),
    (3.28, 0.0005190354332069732),
    (3.29, 0.0005009369137857221),
    (3.3, 0.0004834241423837775),
    (3.31, 0.0004664798561075493),
    (3.32, 0.00045008724059211763),
    (3.33, 0.0004342299203816554),
    (3.34, 0.00041889194945036995),
    (3.35, 0.000404057801864021),
    (3.36, 0.00038971236258203185),
    (3.37, 0.0003758409184000832),
    (3.38, 0.00036242914903304393),
    (3.39, 0.0003494631183379712),
    (3.4, 0.0003369292656768811),
    (3.41, 0.00032481439741887785),
    (3.42, 0.00031310567858120007),
    (3.43, 0.0003017906246086372),
    (3.44, 0.00029085709329074324),
    (3.45, 0.0002802932768161772),
    (3.46, 0.0002700876939634747),
    (3.47, 0.00026022918242746664),
    (3.48, 0.00025070689128053766),
    (3.49, 0.00024151027356783606),
    (3.5, 0.00023262907903552504),
    (3.51, 0.00022405334699109302),
    (3.52, 0.00021577339929471754),
    (3.53, 0.00020777983348062144),
    (3.54, 0.00020006351600732018),
    (3.55, 0.00019261557563563338),
    (3.56, 0.0001854273969332779),
    (3.57, 0.00017849061390484748),
    (3.58, 0.00017179710374593072),
    (3.59, 0.00016533898072010976),
    (3.6, 0.00015910859015753383),
    (3.61, 0.0001530985025737553),
    (3.62, 0.00014730150790747255),
    (3.63, 0.00014171060987581925),
    (3.64, 0.0001363190204458019),
    (3.65, 0.00013112015442048462),
    (3.66, 0.00012610762413848667),
    (3.67, 0.00012127523428535794),
    (3.68, 0.00011661697681536814),
    (3.69, 0.00011212702598224711),
    (3.7, 0.00010779973347738826),
    (3.71, 0.00010362962367403111),
    (3.72, 9.961138897591655e-05),
    (3.73, 9.57398852689145e-05),
    (3.74, 9.201012747410543e-05),
    (3.75, 8.841728520080387e-05),
    (3.76, 8.495667849799793e-05),
    (3.77, 8.162377370268611e-05),
    (3.78, 7.841417938358509e-05),
    (3.79, 7.532364237868328e-05),
    (3.8, 7.234804392512003e-05),
    (3.81, 6.948339587986516e-05),
    (3.82, 6.672583702968476e-05),
    (3.83, 6.407162948887454e-05),
    (3.84, 6.151715518325528e-05),
    (3.85, 5.905891241892252e-05),
    (3.86, 5.6693512534256655e-05),
    (3.87, 5.441767663369975e-05),
    (3.88, 5.222823240182017e-05),
    (3.89, 5.0122110996188354e-05),
    (3.9, 4.8096344017602736e-05),
    (3.91, 4.6148060556208776e-05),
    (3.92, 4.427448431207073e-05),
    (3.93, 4.247293078876117e-05),
    (3.94, 4.074080455855073e-05),
    (3.95, 3.907559659778748e-05),
    (3.96, 3.747488169107345e-05),
    (3.97, 3.5936315902853785e-05),
    (3.98, 3.445763411505308e-05),
    (3.99, 3.303664762940242e-05),
    (4.0, 3.1671241833119924e-05),
    (4.01, 3.035937392661822e-05),
    (4.02, 2.909907071193103e-05),
    (4.03, 2.788842644056392e-05),
    (4.04, 2.6725600719492083e-05),
    (4.05, 2.5608816474041506e-05),
    (4.06, 2.453635796640977e-05),
    (4.07, 2.350656886859556e-05),
    (4.08, 2.2517850388525434e-05),
    (4.09, 2.15686594481806e-05),
    (4.1, 2.065750691254677e-05),
    (4.11, 1.9782955868224025e-05),
    (4.12, 1.8943619950553246e-05),
    (4.13, 1.813816171813091e-05),
    (4.14, 1.7365291073604073e-05),
    (4.15, 1.662376372965222e-05),
    (4.16, 1.591237971908217e-05),
    (4.17, 1.5229981947977885e-05),
    (4.18, 1.4575454790867035e-05),
    (4.19, 1.3947722726881233e-05),
    (4.2, 1.3345749015906327e-05),
    (4.21, 1.2768534413734954e-05),
    (4.22, 1.2215115925253035e-05),
    (4.23, 1.1684565594707405e-05),
    (4.24, 1.1175989332120554e-05),
    (4.25, 1.068852577493442e-05),
    (4.26, 1.0221345183984074e-05),
    (4.27, 9.773648372917587e-06),
    (4.28, 9.344665670196366e-06),
    (4.29, 8.933655912827003e-06),
    (4.3, 8.539905470991811e-06),
    (4.31, 8.162727302763083e-06),
    (4.32, 7.801460038101336e-06),
    (4.33, 7.4554670913551255e-06),
    (4.34, 7.124135801495343e-06),
    (4.35, 6.806876599334064e-06),
    (4.36, 6.503122200992792e-06),
    (4.37, 6.2123268269015034e-06),
    (4.38, 5.9339654456246675e-06),
    (4.39, 5.667533041826739e-06),
    (4.4, 5.412543907703851e-06),
    (4.41, 5.168530957224135e-06),
    (4.42, 4.93504506253327e-06),
    (4.43, 4.7116544118972375e-06),
    (4.44, 4.497943888567908e-06),
    (4.45, 4.293514469971867e-06),
    (4.46, 4.097982646636359e-06),
    (4.47, 3.9109798602807056e-06),
    (4.48, 3.732151960514473e-06),
    (4.49, 3.5611586795975568e-06),
    (4.5, 3.3976731247300603e-06),
    (4.51, 3.241381287353392e-06),
    (4.52, 3.0919815689561836e-06),
    (4.53, 2.949184322891514e-06),
    (4.54, 2.8127114117242083e-06),
    (4.55, 2.6822957796388557e-06),
    (4.56, 2.55768103945153e-06),
    (4.57, 2.438621073779422e-06),
    (4.58, 2.3248796499344088e-06),
    (4.59, 2.2162300481175426e-06),
    (4.6, 2.1124547025028533e-06),
    (4.61, 2.013344854809338e-06),
    (4.62, 1.918700219970897e-06),
    (4.63, 1.8283286635241622e-06),
    (4.64, 1.7420458903446588e-06),
    (4.65, 1.6596751443714612e-06),
    (4.66, 1.5810469189705104e-06),
    (4.67, 1.5059986775961556e-06),
    (4.68, 1.4343745844201348e-06),
    (4.69, 1.3660252446061368e-06),
    (4.7, 1.300807453917281e-06),
    (4.71, 1.2385839573524706e-06),
    (4.72, 1.1792232165163975e-06),
    (4.73, 1.1225991854361711e-06),
    (4.74, 1.0685910945459334e-06),
    (4.75, 1.0170832425687032e-06),
    (4.76, 9.679647960327326e-07),
    (4.77, 9.211295961671434e-07),
    (4.78, 8.764759729292036e-07),
    (4.79, 8.339065659229105e-07),
    (4.8, 7.933281519755953e-07),
    (4.81, 7.546514791463717e-07),
    (4.82, 7.177911069468994e-07),
    (4.83, 6.826652525616634e-07),
    (4.84, 6.491956428613351e-07),
    (4.85, 6.173073720091976e-07),
    (4.86, 5.869287644666379e-07),
    (4.87, 5.579912432097822e-07),
    (4.88, 5.304292029750943e-07),
    (4.89, 5.04179888357536e-07),
    (4.9, 4.79183276590319e-07),
    (4.91, 4.5538196484073184e-07),
    (4.92, 4.327210618617018e-07),
    (4.93, 4.111480838439307e-07),
    (4.94, 3.906128543183255e-07),
    (4.95, 3.7106740796333265e-07),
    (4.96, 3.5246589817642413e-07),
    (4.97, 3.347645082736173e-07),
    (4.98, 3.1792136618528137e-07),
    (4.99, 3.0189646252084845e-07),
    (5.0, 2.866515718791939e-07),
    (5.01, 2.7215017728558194e-07),
    (5.02, 2.5835739763997333e-07),
    (5.03, 2.452399180653701e-07),
    (5.04, 2.3276592304859983e-07),
    (5.05, 2.2090503226954353e-07),
    (5.06, 2.0962823901837037e-07),
    (5.07, 1.989078511037128e-07),
    (5.08, 1.8871743415806013e-07),
    (5.09, 1.7903175724983412e-07),
    (5.1, 1.6982674071476014e-07),
    (5.11, 1.610794061221374e-07),
    (5.12, 1.527678282945661e-07),
    (5.13, 1.4487108930250848e-07),
    (5.14, 1.3736923435784187e-07),
    (5.15, 1.302432295332013e-07),
    (5.16, 1.2347492123651644e-07),
    (5.17, 1.170469973726316e-07),
    (5.18, 1.1094295012634645e-07),
    (5.19, 1.0514704030354048e-07),
    (5.2, 9.964426316933471e-08),
    (5.21, 9.442031572442968e-08),
    (5.22, 8.946156536290752e-08),
    (5.23, 8.475501985682836e-08),
    (5.24, 8.028829861495883e-08),
    (5.25, 7.604960516488715e-08),
    (5.26, 7.202770080965962e-08),
    (5.27, 6.821187941186244e-08),
    (5.28, 6.4591943259825e-08),
    (5.29, 6.115817997230596e-08),
    (5.3, 5.790134039964594e-08),
    (5.31, 5.481261748095655e-08),
    (5.32, 5.188362601842416e-08),
    (5.33, 4.9106383331285315e-08),
    (5.34, 4.647329075344126e-08),
    (5.35, 4.397711594005899e-08),
    (5.36, 4.161097594981966e-08),
    (5.37, 3.9368321070759047e-08),
    (5.38, 3.724291935887116e-08),
    (5.39, 3.522884185984301e-08),
    (5.4, 3.332044848542851e-08),
    (5.41, 3.151237451708221e-08),
    (5.42, 2.9799517710536285e-08),
    (5.43, 2.817702597603991e-08),
    (5.44, 2.664028560996717e-08),
    (5.45, 2.518491005446112e-08),
    (5.46, 2.380672916270037e-08),
    (5.47, 2.2501778948268565e-08),
    (5.48, 2.126629179795909e-08),
    (5.49, 2.0096687128176454e-08),
    (5.5, 1.8989562465887718e-08),
    (5.51, 1.7941684935847136e-08),
    (5.52, 1.694998313655086e-08),
    (5.53, 1.6011539388090922e-08),
    (5.54, 1.5123582335760968e-08),
    (5.55, 1.4283479893922769e-08),
    (5.56, 1.3488732515278456e-08),
    (5.57, 1.273696677129989e-08),
    (5.58, 1.2025929230154912e-08),
    (5.59, 1.1353480619032174e-08),
    (5.6, 1.071759025831093e-08),
    (5.61, 1.0116330755541375e-08),
    (5.62, 9.547872947704268e-09),
    (5.63, 9.010481080699058e-09),
    (5.64, 8.502508215475054e-09),
    (5.65, 8.022391850663497e-09),
    (5.66, 7.568649751997714e-09),
    (5.67, 7.139875979218408e-09),
    (5.68, 6.734737101557531e-09),
    (5.69, 6.35196859327195e-09),
    (5.7, 5.990371401063528e-09),
    (5.71, 5.648808675570935e-09),
    (5.72, 5.326202659455504e-09),
    (5.73, 5.0215317249245225e-09),
    (5.74, 4.733827553845582e-09),
    (5.75, 4.462172453901612e-09),
    (5.76, 4.205696804522027e-09),
    (5.77, 3.963576626597655e-09),
    (5.78, 3.735031270249746e-09),
    (5.79, 3.5193212151746256e-09),
    (5.8, 3.315745978326165e-09),
    (5.81, 3.1236421239300216e-09),
    (5.82, 2.942381371044362e-09),
    (5.83, 2.771368794094629e-09),
    (5.84, 2.610041112012917e-09),
    (5.85, 2.4578650618080334e-09),
    (5.86, 2.314335852578559e-09),
    (5.87, 2.1789756961605578e-09),
    (5.88, 2.0513324107725974e-09),
    (5.89, 1.9309780941853104e-09),
    (5.9, 1.8175078630994284e-09),
    (5.91, 1.7105386555670024e-09),
    (5.92, 1.6097080934342473e-09),
    (5.93, 1.514673401922654e-09),
    (5.94, 1.425110383596562e-09),
    (5.95, 1.3407124440918718e-09),
    (5.96, 1.2611896671010935e-09),
    (5.97, 1.1862679362257285e-09),
    (5.98, 1.115688101417167e-09),
    (5.99, 1.0492051878331543e-09),
    (6.0, 9.86587645037698e-10),
    (7.0, 1.279812543885835e-12),
    (8.0, 6.220960574271784e-16),
    (10.0, 7.619853024160525e-24),
    (12.0, 1.776482112077679e-33),
    (15.0, 3.670966199312751e-51),
    (20.0, 2.7536241186062337e-89),
];
