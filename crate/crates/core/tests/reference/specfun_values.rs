#![allow(clippy::excessive_precision, clippy::approx_constant)]

// Frozen reference values computed at 50 significant digits.

pub const GAMMA: &[(f64, f64)] = &[
    (0.1, 9.51350769866873),
    (0.5, 1.772453850905516),
    (1.0, 1.0),
    (1.5, 0.886226925452758),
    (2.5, 1.329340388179137),
    (5.0, 24.0),
    (7.3, 1271.4236336639087),
    (20.0, 1.21645100408832e+17),
    (55.5, 1.7080962807994106e+72),
    (99.0, 9.426890448883248e+153),
    (-0.5, -3.544907701811032),
    (-1.5, 2.363271801207355),
    (-2.7, -0.931082784838964),
    (-10.3, -5.26236323953561e-07),
    (-55.2, 1.884665992709751e-73),
    (-99.5, 3.3704592739067173e-157),
];
pub const LOG_GAMMA: &[(f64, f64)] = &[
    (0.01, 4.599479878042022),
    (0.3, 1.0957979948180756),
    (0.9, 0.06637623973474295),
    (3.0, 0.6931471805599453),
    (10.5, 13.940625219403763),
    (50.0, 144.5657439463449),
    (100.0, 359.1342053695754),
    (1000.0, 5905.220423209181),
];
pub const DIGAMMA: &[(f64, f64)] = &[
    (0.01, -100.56088545786868),
    (0.3, -3.502524222200133),
    (1.0, -0.5772156649015329),
    (1.4616321449683622, -9.241265521729427e-17),
    (2.0, 0.42278433509846713),
    (7.7, 1.9748820949131018),
    (33.0, 3.4812795305349873),
    (100.0, 4.600161852738087),
    (-0.5, 0.03648997397857652),
    (-1.25, 3.714139120213528),
    (-7.9, -7.540007224419479),
    (-40.1, 13.372621332038497),
];
/// (a_re, a_im, b_re, b_im, z_re, z_im, M_re, M_im)
pub const KUMMER: &[[f64; 8]] = &[
    [0.5, 0.0, 1.5, 0.0, -2.0, 0.0, 0.5981440066613041, 0.0],
    [1.0, 0.0, 2.0, 0.0, 10.0, 0.0, 2202.5465794806714, 0.0],
    [-0.3, 0.0, 2.0, 0.0, 20.0, 0.0, -135524.18524883402, 0.0],
    [-2.5, 0.0, 2.0, 0.0, 3.0, 0.0, -0.320253806883778, 0.0],
    [1.7, 0.0, 3.0, 0.0, -15.0, 0.0, 0.02150257187886992, 0.0],
    [0.5, 0.0, 1.5, 0.0, 40.0, 0.0, 2980568725898933.0, 0.0],
    [0.5, 0.0, 2.0, 0.0, 45.0, 0.0, 6.642846547164794e+16, 0.0],
    [-3.0, 0.0, 2.0, 0.0, 12.0, 0.0, -17.0, 0.0],
    [0.3, 0.4, 2.0, 0.0, 1.0, -1.0, 1.4729021645647338, -0.022264273058711287],
    [
        0.30000000000000004,
        0.7,
        2.0,
        0.0,
        8.0,
        -8.0,
        -89.31696870168825,
        64.15416549419075,
    ],
    [0.2, -0.5, 3.0, 0.0, 25.0, -25.0, 2380656.44689465, -1920596.6755805532],
    [1.5, 0.0, 4.0, 0.0, -33.0, 0.0, 0.02221713082278046, 0.0],
    [0.7, 0.0, 1.2, 0.0, 0.001, 0.0, 1.000583558775523, 0.0],
    [2.0, 1.0, 5.0, 0.0, -3.0, 4.0, 0.1366588090448129, 0.056022292136896676],
    [0.5, 0.0, 1.5, 0.0, 60.0, 0.0, 9.598104797017776e+23, 0.0],
];
/// (tau, mu, z, W, M)
pub const WHITTAKER: &[[f64; 5]] = &[
    [0.3, 0.0, 1e-06, 0.003909981316245687, 0.000999999700000085],
    [0.3, 0.0, 0.01, 0.18967421077760852, 0.09970084888486953],
    [0.3, 0.0, 0.5, 0.6051706348072429, 0.615144979250539],
    [0.3, 0.0, 2.0, 0.4458358808841845, 0.9500304630348673],
    [0.3, 0.0, 8.0, 0.034020283405489016, 7.079174595494203],
    [0.3, 0.0, 15.0, 0.001243110327227539, 183.23467197940812],
    [0.3, 0.0, 25.0, 9.772921674533273e-06, 22865.087478964047],
    [0.3, 0.0, 31.0, 5.19153398003311e-07, 428194.46404874994],
    [0.3, 0.0, 45.0, 5.296118236885326e-10, 416999711.20256865],
    [0.3, 0.0, 80.0, 1.5810020588775474e-17, 1.3883292850008466e+16],
    [0.3, 0.5, 1e-06, 0.7703862379199624, 9.999998500000492e-07],
    [0.3, 0.5, 0.01, 0.7796278492701675, 0.009985049123192946],
    [0.3, 0.5, 0.5, 0.7923459649088114, 0.46839430468857285],
    [0.3, 0.5, 2.0, 0.49166521030589505, 1.7431757807379396],
    [0.3, 0.5, 8.0, 0.035018559315819, 23.953152228235016],
    [0.3, 0.5, 15.0, 0.0012631059087222292, 636.1825310781579],
    [0.3, 0.5, 25.0, 9.86853106815512e-06, 80015.60011998986],
    [0.3, 0.5, 31.0, 5.232660882005903e-07, 1501677.2782433997],
    [0.3, 0.5, 45.0, 5.325177529967341e-10, 1466385256.3047194],
    [0.3, 0.5, 80.0, 1.5859078521898022e-17, 4.894538971929092e+16],
    [0.3, 1.0, 1e-06, 1089.124747794104, 9.99999900000035e-10],
    [0.3, 1.0, 0.01, 10.9231630338066, 0.000999003497637273],
    [0.3, 1.0, 0.5, 1.637165232342375, 0.3388732179871471],
    [0.3, 1.0, 2.0, 0.6543095822870474, 2.621538584461016],
    [0.3, 1.0, 8.0, 0.03818106365891787, 60.17248558863144],
    [0.3, 1.0, 15.0, 0.001324968779106943, 1702.0697658495194],
    [0.3, 1.0, 25.0, 1.016087131873348e-05, 219175.80996419798],
    [0.3, 1.0, 31.0, 5.357967717271255e-07, 4139909.3835080056],
    [0.3, 1.0, 45.0, 5.413302136103717e-10, 4075578752.6816554],
    [0.3, 1.0, 80.0, 1.6007160177304322e-17, 1.370795698449767e+17],
    [0.3, 1.5, 1e-06, 2201095.1412113276, 9.999999250000272e-13],
    [0.3, 1.5, 0.01, 220.43736636417265, 9.992527235067588e-05],
    [0.3, 1.5, 0.5, 4.610432838494519, 0.24228534886048725],
    [0.3, 1.5, 2.0, 1.0302507662568017, 3.8035884712596273],
    [0.3, 1.5, 8.0, 0.04405584403728033, 151.01686226683094],
    [0.3, 1.5, 15.0, 0.001434613128275981, 4707.878563172322],
    [0.3, 1.5, 25.0, 1.0666999284437113e-05, 630240.3776128397],
    [0.3, 1.5, 31.0, 5.573381102852795e-07, 12032291.30935483],
    [0.3, 1.5, 45.0, 5.563383123095056e-10, 12006434061.27158],
    [0.3, 1.5, 80.0, 1.625701695860077e-17, 4.0900294089837805e+17],
    [0.3, 2.5, 1e-06, 15537141007971.945, 9.999999500000187e-19],
    [0.3, 2.5, 0.01, 155487.33708216914, 9.995018921010796e-07],
    [0.3, 2.5, 0.5, 63.85946945763899, 0.12245574212592637],
    [0.3, 2.5, 2.0, 3.8427108557088325, 7.77395481038964],
    [0.3, 2.5, 8.0, 0.06910691802558683, 1006.7913523208267],
    [0.3, 2.5, 15.0, 0.0018474200293236457, 41457.68915220014],
    [0.3, 2.5, 25.0, 1.2457671222199839e-05, 6265412.583310848],
    [0.3, 2.5, 31.0, 6.321360674654958e-07, 123741833.07075101],
    [0.3, 2.5, 45.0, 6.071756235267578e-10, 128903825990.4278],
    [0.3, 2.5, 80.0, 1.7082847904696636e-17, 4.573385587239256e+18],
    [0.3, 0.3, 1e-06, 0.05301764355504955, 1.5848928952937334e-05],
    [0.3, 0.3, 0.01, 0.34065505797330864, 0.025071914230233402],
    [0.3, 0.3, 0.5, 0.6681570036390864, 0.5285624956159707],
    [0.3, 0.3, 2.0, 0.46189365837755403, 1.437227543272432],
    [0.3, 0.3, 8.0, 0.03437654277563366, 16.094934706285816],
    [0.3, 0.3, 15.0, 0.0012502733603136787, 421.24604693657756],
    [0.3, 0.3, 25.0, 9.80723641372904e-06, 52715.35887161821],
    [0.3, 0.3, 31.0, 5.206303022840582e-07, 987965.0907019746],
    [0.3, 0.3, 45.0, 5.306561522444372e-10, 963074771.8875248],
    [0.3, 0.3, 80.0, 1.5827664078286248e-17, 3.2093366134412948e+16],
    [0.7, 0.0, 1e-06, -0.0014818519498194516, 0.000999999300000185],
    [0.7, 0.0, 0.01, 0.01020641692535801, 0.09930184662103289],
    [0.7, 0.0, 0.5, 0.45142320217870824, 0.4895160275879792],
    [0.7, 0.0, 2.0, 0.587007730936757, 0.179194221094498],
    [0.7, 0.0, 8.0, 0.07814223227174713, -2.748491820857528],
    [0.7, 0.0, 15.0, 0.0036721362507597458, -52.105220133425554],
    [0.7, 0.0, 25.0, 3.541523316463645e-05, -5153.488847218171],
    [0.7, 0.0, 31.0, 2.0503763142421504e-06, -87905.87506428406],
    [0.7, 0.0, 45.0, 2.427948049559512e-09, -73085741.73764284],
    [0.7, 0.0, 80.0, 9.123623828252398e-17, -1916894015711441.5],
    [0.7, 0.5, 1e-06, 0.3342766015538646, 9.999996500000825e-07],
    [0.7, 0.5, 0.01, 0.35114407678290827, 0.009965082379103688],
    [0.7, 0.5, 0.5, 0.6455123349290502, 0.4220994309972181],
    [0.7, 0.5, 2.0, 0.6559774539760492, 1.1054897489514088],
    [0.7, 0.5, 8.0, 0.0805369348244997, 5.296150584733798],
    [0.7, 0.5, 15.0, 0.0037326725213721124, 99.46450341006464],
    [0.7, 0.5, 25.0, 3.5767011019753535e-05, 9920.224110640374],
    [0.7, 0.5, 31.0, 2.066821481977446e-06, 169592.8736821168],
    [0.7, 0.5, 45.0, 2.4413854631790627e-09, 141393867.4487615],
    [0.7, 0.5, 80.0, 9.152073648415868e-17, 3718094539477854.5],
    [0.7, 1.0, 1e-06, 858.9376204817321, 9.999997666667182e-10],
    [0.7, 1.0, 0.01, 8.649697249939825, 0.0009976718270405468],
    [0.7, 1.0, 0.5, 1.5794829033188111, 0.31660912396998214],
    [0.7, 1.0, 2.0, 0.9045670174310124, 1.978519760424929],
    [0.7, 1.0, 8.0, 0.08813881721177724, 23.486783979624366],
    [0.7, 1.0, 15.0, 0.003920091316323479, 482.5502866280552],
    [0.7, 1.0, 25.0, 3.684291982569897e-05, 49357.60226725621],
    [0.7, 1.0, 31.0, 2.1169363538505164e-06, 849460.4580684416],
    [0.7, 1.0, 45.0, 2.4821391626628047e-09, 714146252.8496536],
    [0.7, 1.0, 80.0, 9.237952144138613e-17, 1.892557150814334e+16],
    [0.7, 1.5, 1e-06, 2228485.797064354, 9.999998250000372e-13],
    [0.7, 1.5, 0.01, 223.62836558775552, 9.982537211251258e-05],
    [0.7, 1.5, 0.5, 5.179720896089078, 0.23033837402220708],
    [0.7, 1.5, 2.0, 1.495346651713308, 3.095845044184405],
    [0.7, 1.5, 8.0, 0.10231721247264684, 73.91264156974505],
    [0.7, 1.5, 15.0, 0.004252726470119402, 1707.1726808584963],
    [0.7, 1.5, 25.0, 3.8706655608253855e-05, 182011.9187024036],
    [0.7, 1.5, 31.0, 2.203119699260386e-06, 3167441.006974254],
    [0.7, 1.5, 45.0, 2.551557446077549e-09, 2700073096.0708613],
    [0.7, 1.5, 80.0, 9.38286271885293e-17, 7.248584115490038e+16],
    [0.7, 2.5, 1e-06, 20570634526887.086, 9.999998833333569e-19],
    [0.7, 2.5, 0.01, 206065.85617494877, 9.988357004767171e-07],
    [0.7, 2.5, 0.5, 88.9466381254689, 0.11842040387625062],
    [0.7, 2.5, 2.0, 6.201673296308053, 6.79248612591296],
    [0.7, 2.5, 8.0, 0.16341173147670066, 614.8227462031487],
    [0.7, 2.5, 15.0, 0.005509647816546123, 19446.71524807305],
    [0.7, 2.5, 25.0, 4.531004260137752e-05, 2358415.940886486],
    [0.7, 2.5, 31.0, 2.5026632300172786e-06, 42510737.336656615],
    [0.7, 2.5, 45.0, 2.7868117361538257e-09, 37873848540.44663],
    [0.7, 2.5, 80.0, 9.861898540654411e-17, 1.0596269215144728e+18],
    [0.7, 0.3, 1e-06, 0.009893171089687607, 1.5848924990705116e-05],
    [0.7, 0.3, 0.01, 0.08731199887291818, 0.02500923755509111],
    [0.7, 0.3, 0.5, 0.515966747819711, 0.4629170892081025],
    [0.7, 0.3, 2.0, 0.6111113332380727, 0.7737957909373028],
    [0.7, 0.3, 8.0, 0.07899655974780244, 1.5916121399755232],
    [0.7, 0.3, 15.0, 0.0036938197962532006, 28.29575717133498],
    [0.7, 0.3, 25.0, 3.554148264714202e-05, 2806.6156315046533],
    [0.7, 0.3, 31.0, 2.0562817497809545e-06, 47912.479150480314],
    [0.7, 0.3, 45.0, 2.4327770975508363e-09, 39874791.81715131],
    [0.7, 0.3, 80.0, 9.133855643753199e-17, 1046811978773207.5],
    [1.0, 0.0, 1e-06, -0.0035613267513702708, 0.0009999990000003126],
    [1.0, 0.0, 0.01, -0.0947921418840376, 0.0990031187587793],
    [1.0, 0.0, 0.5, 0.219968717092394, 0.4036396201197949],
    [1.0, 0.0, 2.0, 0.64821693550647, -0.1919761956450897],
    [1.0, 0.0, 8.0, 0.1420120609828514, -2.9351505682843726],
    [1.0, 0.0, 15.0, 0.008159094299963065, -40.63874899928548],
    [1.0, 0.0, 25.0, 9.223919255327264e-05, -3341.5134353275184],
    [1.0, 0.0, 31.0, 5.705511162192798e-06, -53020.901795769336],
    [1.0, 0.0, 45.0, 7.571358802944254e-09, -39046157.62671328],
    [1.0, 0.0, 80.0, 3.3880789610988e-16, -854317671779134.4],
    [1.0, 0.5, 1e-06, 9.99999500000125e-07, 9.99999500000125e-07],
    [1.0, 0.5, 0.01, 0.009950124791926824, 0.009950124791926824],
    [1.0, 0.5, 0.5, 0.38940039153570244, 0.38940039153570244],
    [1.0, 0.5, 2.0, 0.7357588823428847, 0.7357588823428847],
    [1.0, 0.5, 8.0, 0.14652511110987343, 0.14652511110987343],
    [1.0, 0.5, 15.0, 0.008296265552217503, 0.008296265552217503],
    [1.0, 0.5, 25.0, 9.316632930196678e-05, 9.316632930196678e-05],
    [1.0, 0.5, 31.0, 5.751713224109532e-06, 5.751713224109532e-06],
    [1.0, 0.5, 45.0, 7.613540651768087e-09, 7.613540651768087e-09],
    [1.0, 0.5, 80.0, 3.398683404233271e-16, 3.398683404233271e-16],
    [1.0, 1.0, 1e-06, 564.1901477403987, 9.999996666667395e-10],
    [1.0, 1.0, 0.01, 5.699420869420161, 0.0009966739479285915],
    [1.0, 1.0, 0.5, 1.274878369874384, 0.3006376742312486],
    [1.0, 1.0, 2.0, 1.0563076280079453, 1.5776107480733041],
    [1.0, 1.0, 8.0, 0.16087658526226573, 9.730502954291026],
    [1.0, 1.0, 15.0, 0.008721183160873173, 150.1159357852476],
    [1.0, 1.0, 25.0, 9.600257902908325e-05, 12792.588005196867],
    [1.0, 1.0, 31.0, 5.892529164588128e-06, 204858.488291329],
    [1.0, 1.0, 45.0, 7.741480913317349e-09, 152586378.94101614],
    [1.0, 1.0, 80.0, 3.430694651872466e-16, 3373710786744317.0],
    [1.0, 1.5, 1e-06, 2000001.00000025, 9.9999975000005e-13],
    [1.0, 1.5, 0.01, 201.00247092171375, 9.975049937566908e-05],
    [1.0, 1.5, 0.5, 5.062205089964132, 0.22168973036050288],
    [1.0, 1.5, 2.0, 1.8393972058572117, 2.6366538678055007],
    [1.0, 1.5, 8.0, 0.18773529860952534, 40.3854066290296],
    [1.0, 1.5, 15.0, 0.009476178875199548, 723.1885372457997],
    [1.0, 1.5, 25.0, 0.00010091776789989041, 64400.948462256565],
    [1.0, 1.5, 31.0, 6.134761763488315e-06, 1043167.4470041143],
    [1.0, 1.5, 45.0, 7.959439782613846e-09, 788069608.4031054],
    [1.0, 1.5, 80.0, 3.4847125779029257e-16, 1.7653895012776498e+16],
    [1.0, 2.5, 1e-06, 24000006000000.004, 9.99999833333363e-19],
    [1.0, 2.5, 0.01, 240599.99749379052, 9.983363065505107e-07],
    [1.0, 2.5, 0.5, 107.86390845538958, 0.1154690723857918],
    [1.0, 2.5, 2.0, 8.461227146943173, 6.127633231320754],
    [1.0, 2.5, 8.0, 0.30449749652520575, 415.57607517908593],
    [1.0, 2.5, 15.0, 0.012337468683431007, 10607.428914182572],
    [1.0, 2.5, 25.0, 0.00011835254210014327, 1081935.9416192167],
    [1.0, 2.5, 31.0, 6.977314095065436e-06, 18171303.916015677],
    [1.0, 2.5, 45.0, 8.698360534594498e-09, 14360379530.901031],
    [1.0, 2.5, 80.0, 3.663302769909746e-16, 3.354240052427535e+17],
    [1.0, 0.3, 1e-06, -0.0161311821810951, 1.584892201903135e-05],
    [1.0, 0.3, 0.01, -0.08322801056471951, 0.02496229333253396],
    [1.0, 0.3, 0.5, 0.2754001862972326, 0.4170027887190202],
    [1.0, 0.3, 2.0, 0.6787301515392412, 0.40791958096953906],
    [1.0, 0.3, 8.0, 0.1436216730255558, -1.458924363841962],
    [1.0, 0.3, 15.0, 0.008208223379039425, -21.947750321437663],
    [1.0, 0.3, 25.0, 9.257192098277712e-05, -1811.032100208317],
    [1.0, 0.3, 31.0, 5.72210187481293e-06, -28760.074055531997],
    [1.0, 0.3, 45.0, 7.5865176651254e-09, -21201440.670776352],
    [1.0, 0.3, 80.0, 3.3918927747585827e-16, -464318717701779.9],
    [1.29, 0.0, 1e-06, -0.0029777199733072627, 0.0009999987100004785],
    [1.29, 0.0, 0.01, -0.1287362674163907, 0.09871477482368568],
    [1.29, 0.0, 0.5, -0.06806489324623481, 0.3270484871758049],
    [1.29, 0.0, 2.0, 0.6214470757249201, -0.41981399162855154],
    [1.29, 0.0, 8.0, 0.2469613813209412, -1.4722586684992252],
    [1.29, 0.0, 15.0, 0.017438927481351132, -12.968918027214187],
    [1.29, 0.0, 25.0, 0.00023104249330414643, -881.8241354993672],
    [1.29, 0.0, 31.0, 1.5256883382309782e-05, -13020.24479377942],
    [1.29, 0.0, 45.0, 2.2644144709112965e-08, -8507428.055520186],
    [1.29, 0.0, 80.0, 1.2017286583176545e-15, -155906771685659.6],
    [1.29, 0.5, 1e-06, -0.2261248959222244, 9.999993550001803e-07],
    [1.29, 0.5, 0.01, -0.23133306024796807, 0.009935680013861057],
    [1.29, 0.5, 0.5, 0.046986577034788084, 0.3593708929930769],
    [1.29, 0.5, 2.0, 0.7238392679613347, 0.45236421348350936],
    [1.29, 0.5, 8.0, 0.255121621157096, -1.3681988441813677],
    [1.29, 0.5, 15.0, 0.017738060017541354, -15.823846361958713],
    [1.29, 0.5, 25.0, 0.00023339252462635602, -1088.2551014243852],
    [1.29, 0.5, 31.0, 1.538161319158261e-05, -16106.437232169983],
    [1.29, 0.5, 45.0, 2.277112660584738e-08, -10554520.121262746],
    [1.29, 0.5, 80.0, 1.2055037385642577e-15, -193935350311832.5],
    [1.29, 1.0, 1e-06, 229.36398270102663, 9.999995700001005e-10],
    [1.29, 1.0, 0.01, 2.3246612465434446, 0.0009957100429517697],
    [1.29, 1.0, 0.5, 0.754543518029772, 0.285771144078238],
    [1.29, 1.0, 2.0, 1.10678593014396, 1.2477777404665489],
    [1.29, 1.0, 8.0, 0.281120375153673, 2.910212760062137],
    [1.29, 1.0, 15.0, 0.01866522737070691, 30.204787315544475],
    [1.29, 1.0, 25.0, 0.00024058318741991249, 2135.1643065827834],
    [1.29, 1.0, 31.0, 1.5761822694371385e-05, 31826.387485185103],
    [1.29, 1.0, 45.0, 2.3156297475710023e-08, 21037871.435997754],
    [1.29, 1.0, 80.0, 1.2168996892543947e-15, 389649667287769.8],
    [1.29, 1.5, 1e-06, 1559460.8833599589, 9.999996775000666e-13],
    [1.29, 1.5, 0.01, 156.9564112500218, 9.967816510078545e-05],
    [1.29, 1.5, 0.5, 4.328758392336161, 0.2135762896092204],
    [1.29, 1.5, 2.0, 2.0763945414562386, 2.2448467021553893],
    [1.29, 1.5, 8.0, 0.3299575820935099, 20.65192728980405],
    [1.29, 1.5, 15.0, 0.020314527524546325, 277.82962329614674],
    [1.29, 1.5, 25.0, 0.0002530499385417347, 20598.12454473536],
    [1.29, 1.5, 31.0, 1.6416048957561563e-05, 310675.0086464911],
    [1.29, 1.5, 45.0, 2.381256465939982e-08, 208352806.34241346],
    [1.29, 1.5, 80.0, 1.2361308341369466e-15, 3910426043938694.5],
    [1.29, 2.5, 1e-06, 26357076852401.203, 9.999997850000375e-19],
    [1.29, 2.5, 0.01, 264421.4263141868, 9.978537625256244e-07],
    [1.29, 2.5, 0.5, 123.0325421979525, 0.11267610842344548],
    [1.29, 2.5, 2.0, 10.898456648682677, 5.53831145349658],
    [1.29, 2.5, 8.0, 0.5443064159688472, 278.4937843799751],
    [1.29, 2.5, 15.0, 0.026584106168988986, 5677.047709025779],
    [1.29, 2.5, 25.0, 0.0002973217903270845, 486053.17855696095],
    [1.29, 2.5, 31.0, 1.8693350067831763e-05, 7609689.995344589],
    [1.29, 2.5, 45.0, 2.6038242063958183e-08, 5343639460.011218],
    [1.29, 2.5, 80.0, 1.2997189008941675e-15, 1.0462400513472283e+17],
    [1.29, 0.3, 1e-06, -0.026489930627958878, 1.5848919146413706e-05],
    [1.29, 0.3, 0.01, -0.17026311610851286, 0.024916965431357005],
    [1.29, 0.3, 0.5, -0.031779730896686814, 0.3751995329995542],
    [1.29, 0.3, 2.0, 0.6570078352497378, 0.14196344453986828],
    [1.29, 0.3, 8.0, 0.24987090195351816, -1.7183354337614214],
    [1.29, 0.3, 15.0, 0.01754605441125954, -17.870455250867018],
    [1.29, 0.3, 25.0, 0.00023188583704570736, -1220.763497958767],
    [1.29, 0.3, 31.0, 1.5301671620770132e-05, -18040.154904469982],
    [1.29, 0.3, 45.0, 2.2689777602264723e-08, -11799756.149993926],
    [1.29, 0.3, 80.0, 1.2030863346525662e-15, -216448408882169.88],
    [1.5, 0.0, 1e-06, -0.0009999985000006249, 0.0009999985000006249],
    [1.5, 0.0, 0.01, -0.09850623544007556, 0.09850623544007556],
    [1.5, 0.0, 0.5, -0.2753476574515919, 0.2753476574515919],
    [1.5, 0.0, 2.0, 0.520260095022889, -0.520260095022889],
    [1.5, 0.0, 8.0, 0.36263114887966347, -0.36263114887966347],
    [1.5, 0.0, 15.0, 0.029989211764822492, -0.029989211764822492],
    [1.5, 0.0, 25.0, 0.0004471983806494405, -0.0004471983806494405],
    [1.5, 0.0, 31.0, 3.099114572362763e-05, -3.099114572362763e-05],
    [1.5, 0.0, 45.0, 4.993822371064705e-08, -4.993822371064705e-08],
    [1.5, 0.0, 80.0, 3.0018764147170664e-15, -3.0018764147170664e-15],
    [1.5, 0.5, 1e-06, -0.2821004158603264, 9.999992500002291e-07],
    [1.5, 0.5, 0.01, -0.2991898647536137, 0.009925228724576145],
    [1.5, 0.5, 0.5, -0.21742551300570867, 0.33856204707453597],
    [1.5, 0.5, 2.0, 0.6281534855462685, 0.28627428948363115],
    [1.5, 0.5, 8.0, 0.37499229924134275, -1.4213548592147942],
    [1.5, 0.5, 15.0, 0.030511555945196042, -12.044068260784524],
    [1.5, 0.5, 25.0, 0.0004517874965768367, -716.8321701415093],
    [1.5, 0.5, 31.0, 3.124630563611377e-05, -10056.939870671567],
    [1.5, 0.5, 45.0, 5.021961199136943e-08, -6034451.32601743],
    [1.5, 0.5, 80.0, 3.0113316317659078e-15, -97402898325403.5],
    [1.5, 1.0, 1e-06, 9.99999500000125e-10, 9.99999500000125e-10],
    [1.5, 1.0, 0.01, 0.0009950124791926823, 0.0009950124791926823],
    [1.5, 1.0, 0.5, 0.2753476574515919, 0.2753476574515919],
    [1.5, 1.0, 2.0, 1.040520190045778, 1.040520190045778],
    [1.5, 1.0, 8.0, 0.4144355987196154, 0.4144355987196154],
    [1.5, 1.0, 15.0, 0.03213129831945267, 0.03213129831945267],
    [1.5, 1.0, 25.0, 0.0004658316465098339, 0.0004658316465098339],
    [1.5, 1.0, 31.0, 3.202418391441522e-05, 3.202418391441522e-05],
    [1.5, 1.0, 45.0, 5.107318334043449e-08, 5.107318334043449e-08],
    [1.5, 1.0, 80.0, 3.0398748503463965e-15, 3.0398748503463965e-15],
    [1.5, 1.5, 1e-06, 1128380.0133803815, 9.999996250000811e-13],
    [1.5, 1.5, 0.01, 113.6892275236496, 9.962581130344926e-05],
    [1.5, 1.5, 0.5, 3.388475049099205, 0.20784919004064029],
    [1.5, 1.5, 2.0, 2.121998059113259, 1.9902359245242822],
    [1.5, 1.5, 8.0, 0.48874922361442663, 11.66785721011741],
    [1.5, 1.5, 15.0, 0.03501515556403422, 121.92920691333981],
    [1.5, 1.5, 25.0, 0.00049018852818847, 7860.839450834118],
    [1.5, 1.5, 31.0, 3.336296459672863e-05, 112441.46527916219],
    [1.5, 1.5, 45.0, 5.2527675667195396e-08, 69073645.70286654],
    [1.5, 1.5, 80.0, 3.0880442962822256e-15, 1139028554651119.0],
    [1.5, 2.5, 1e-06, 27081110165706.22, 9.999997500000445e-19],
    [1.5, 2.5, 0.01, 271827.9511103987, 9.975044588967128e-07],
    [1.5, 2.5, 0.5, 129.9762717848119, 0.11068981830795376],
    [1.5, 2.5, 2.0, 12.647529032802462, 5.142143851624578],
    [1.5, 2.5, 8.0, 0.8174276507268677, 205.11215222599654],
    [1.5, 2.5, 15.0, 0.04600340827810717, 3504.105673713634],
    [1.5, 2.5, 25.0, 0.0005767591991330683, 262841.0120074862],
    [1.5, 2.5, 31.0, 3.802576693643444e-05, 3906029.563577274],
    [1.5, 2.5, 45.0, 5.7461799264773275e-08, 2514266867.389629],
    [1.5, 2.5, 80.0, 3.2473309400037125e-15, 4.3267879232314584e+16],
    [1.5, 0.3, 1e-06, -0.022003701874989054, 1.5848917066242506e-05],
    [1.5, 0.3, 0.01, -0.16119019934664972, 0.024884173368248816],
    [1.5, 0.3, 0.5, -0.2587957708182714, 0.34645224744311137],
    [1.5, 0.3, 2.0, 0.5575905223399561, -0.005228157517563106],
    [1.5, 0.3, 8.0, 0.3670374107680643, -1.2492744321181626],
    [1.5, 0.3, 15.0, 0.030176262993002332, -9.063618158208618],
    [1.5, 0.3, 25.0, 0.0004488452100685817, -535.1311947666283],
    [1.5, 0.3, 31.0, 3.1082767504611174e-05, -7496.046058310865],
    [1.5, 0.3, 45.0, 5.0039344080423925e-08, -4489366.333136019],
    [1.5, 0.3, 80.0, 3.0052768963423955e-15, -72339490230961.08],
    [2.5, 0.0, 1e-06, 0.00199999500000325, 0.000999997500001625],
    [2.5, 0.0, 0.01, 0.19503239604655767, 0.09751619802327884],
    [2.5, 0.0, 0.5, 0.13767382872579595, 0.06883691436289797],
    [2.5, 0.0, 2.0, -1.040520190045778, -0.520260095022889],
    [2.5, 0.0, 8.0, 1.7613512945583654, 0.8806756472791827],
    [2.5, 0.0, 15.0, 0.3577284546232397, 0.17886422731161986],
    [2.5, 0.0, 25.0, 0.009819731108427298, 0.004909865554213649],
    [2.5, 0.0, 31.0, 0.0008667190420707862, 0.0004333595210353931],
    [2.5, 0.0, 45.0, 2.096270436217389e-06, 1.0481352181086945e-06],
    [2.5, 0.0, 80.0, 2.3110648549758476e-13, 1.1555324274879238e-13],
    [2.5, 0.5, 1e-06, 0.4231556836802008, 9.999987500005625e-07],
    [2.5, 0.5, 0.01, 0.46001171976549005, 0.009875561070198555],
    [2.5, 0.5, 0.5, -0.01588654425169684, 0.24959134384672196],
    [2.5, 0.5, 2.0, -1.0609990295566294, -0.16585299371035686],
    [2.5, 0.5, 8.0, 1.8349437970812175, 0.3747788409385794],
    [2.5, 0.5, 15.0, 0.36450595074430736, 2.080689374262031],
    [2.5, 0.5, 25.0, 0.009925212225406118, 55.195528675150626],
    [2.5, 0.5, 31.0, 0.0008741156036844773, 588.7354724865578],
    [2.5, 0.5, 45.0, 2.1083677932801586e-06, 227617.81649997065],
    [2.5, 0.5, 80.0, 2.318439481715315e-13, 1951185853672.9275],
    [2.5, 1.0, 1e-06, -2.9999975000008748e-09, 9.999991666669583e-10],
    [2.5, 1.0, 0.01, -0.0029750873127861203, 0.0009916957709287068],
    [2.5, 1.0, 0.5, -0.6883691436289797, 0.2294563812096599],
    [2.5, 1.0, 2.0, -1.040520190045778, 0.3468400633485926],
    [2.5, 1.0, 8.0, 2.072177993598077, -0.6907259978660256],
    [2.5, 1.0, 15.0, 0.38557557983343205, -0.12852519327781067],
    [2.5, 1.0, 25.0, 0.010248296223216345, -0.003416098741072115],
    [2.5, 1.0, 31.0, 0.0008966771496036263, -0.00029889238320120876],
    [2.5, 1.0, 45.0, 2.1450737002982487e-06, -7.150245667660829e-07],
    [2.5, 1.0, 80.0, 2.3407036347667254e-13, -7.802345449222418e-14],
    [2.5, 1.5, 1e-06, -564190.2887855468, 9.999993750001812e-13],
    [2.5, 1.5, 0.01, -57.13257670394335, 9.937680911921932e-05],
    [2.5, 1.5, 0.5, -2.253687851315571, 0.1822139469677726],
    [2.5, 1.5, 2.0, -0.5516143452475876, 1.0593947604074483],
    [2.5, 1.5, 8.0, 2.528049933377361, -1.4122495988175818],
    [2.5, 1.5, 15.0, 0.42327726282528033, -6.795412101031266],
    [2.5, 1.5, 25.0, 0.010809586702753974, -200.49899070940015],
    [2.5, 1.5, 31.0, 0.0009355498854763973, -2186.662691247901],
    [2.5, 1.5, 45.0, 2.2076529854249845e-06, -867312.0010488945],
    [2.5, 1.5, 80.0, 2.3782825510280516e-13, -7602922213971.151],
    [2.5, 2.5, 1e-06, 13540558467992.867, 9.999995833334255e-19],
    [2.5, 2.5, 0.01, 136254.75527482817, 9.95842545588997e-07],
    [2.5, 2.5, 0.5, 74.59411071293759, 0.10163554495630595],
    [2.5, 2.5, 2.0, 13.19914337805005, 3.5657225236720866],
    [2.5, 2.5, 8.0, 4.647386041391288, 35.343568903489235],
    [2.5, 2.5, 15.0, 0.5688320114384537, 182.76434298457875],
    [2.5, 2.5, 25.0, 0.012813626150980154, 6623.6139615838365],
    [2.5, 2.5, 31.0, 0.0010713331450331648, 75455.0616932366],
    [2.5, 2.5, 45.0, 2.420230749892555e-06, 31485715.640776493],
    [2.5, 2.5, 80.0, 2.5026007560979476e-13, 288597760254336.3],
    [2.5, 0.3, 1e-06, 0.037416762149352495, 1.5848907160667672e-05],
    [2.5, 0.3, 0.01, 0.28439737032753515, 0.02472838421215159],
    [2.5, 0.3, 0.5, 0.08637326866886437, 0.22589821371307994],
    [2.5, 0.3, 2.0, -1.0491377778565023, -0.33032969532607626],
    [2.5, 0.3, 8.0, 1.7875409066980623, 0.6639925844493384],
    [2.5, 0.3, 15.0, 0.36015448911451187, 1.8469094335401481],
    [2.5, 0.3, 25.0, 0.009857578364647707, 46.72432002646828],
    [2.5, 0.3, 31.0, 0.0008693747346390244, 497.46602092726414],
    [2.5, 0.3, 45.0, 2.100617592797039e-06, 191936.69946830583],
    [2.5, 0.3, 80.0, 2.313717037587842e-13, 1642376182748.7615],
    [3.7, 0.0, 1e-06, 0.010196081901983796, 0.000999996300003485],
    [3.7, 0.0, 0.01, -0.31601628324029857, 0.09633469685877889],
    [3.7, 0.0, 0.5, -0.8326346084854598, -0.10416236186755282],
    [3.7, 0.0, 2.0, 2.8465832530542277, -0.09731826252999892],
    [3.7, 0.0, 8.0, 3.3768887044066647, -0.762952226914296],
    [3.7, 0.0, 15.0, 5.267952025064761, 0.18973681919889332],
    [3.7, 0.0, 25.0, 0.3487760678929369, 6.583265517240011],
    [3.7, 0.0, 31.0, 0.04251077856284317, 47.421927372257954],
    [3.7, 0.0, 45.0, 0.00017373281029644933, 10205.546466703723],
    [3.7, 0.0, 80.0, 4.093386949262809e-11, 39277783725.13587],
    [3.7, 0.5, 1e-06, -1.0740765364275584, 9.999981500011825e-07],
    [3.7, 0.5, 0.01, -1.2847912187417447, 0.009816178477463626],
    [3.7, 0.5, 0.5, -0.4163804925727053, 0.16269715073079485],
    [3.7, 0.5, 2.0, 2.7303474580244758, -0.2607358277906692],
    [3.7, 0.5, 8.0, 3.6828539200095562, 0.14898281376931488],
    [3.7, 0.5, 15.0, 5.382839829280057, -0.7408458922072515],
    [3.7, 0.5, 25.0, 0.35277307442169203, -4.846113266284],
    [3.7, 0.5, 31.0, 0.0428917432055671, -34.75204212615104],
    [3.7, 0.5, 45.0, 0.00017476710266788053, -7505.224321426953],
    [3.7, 0.5, 80.0, 4.1066638079393136e-11, -28971127979.617706],
    [3.7, 1.0, 1e-06, -453.5204241960256, 9.999987666672682e-10],
    [3.7, 1.0, 0.01, -4.700936129219237, 0.0009877266646893688],
    [3.7, 1.0, 0.5, 1.3003489912864565, 0.18190756627024746],
    [3.7, 1.0, 2.0, 2.1500243343632373, -0.04086471591630754],
    [3.7, 1.0, 8.0, 4.702275530789623, 0.44195272433272004],
    [3.7, 1.0, 15.0, 5.741584849890712, -0.13946946920407355],
    [3.7, 1.0, 25.0, 0.3650312482048303, -3.900191662245879],
    [3.7, 1.0, 31.0, 0.04405469283545799, -28.482156830190586],
    [3.7, 1.0, 45.0, 0.0001779064375605805, -6219.597612286643],
    [3.7, 1.0, 80.0, 4.146750992709193e-11, -24223398775.31431],
    [3.7, 1.5, 1e-06, 795570.6229083263, 9.999990750003672e-13],
    [3.7, 1.5, 0.01, 81.05688661399141, 9.907866368118286e-05],
    [3.7, 1.5, 0.5, 5.200184234177721, 0.15478684267190346],
    [3.7, 1.5, 2.0, 0.24865748942992474, 0.4022883209912699],
    [3.7, 1.5, 8.0, 6.785039810048268, -0.07462477187215749],
    [3.7, 1.5, 15.0, 6.389155873734584, 1.3112470432482501],
    [3.7, 1.5, 25.0, 0.3863810458287021, 9.654867204825582],
    [3.7, 1.5, 31.0, 0.04606151965168406, 71.32159850791086],
    [3.7, 1.5, 45.0, 0.00018326230298420785, 15858.141844285166],
    [3.7, 1.5, 80.0, 4.21442654029134e-11, 62685953139.75689],
    [3.7, 2.5, 1e-06, -5615787437679.944, 9.99999383333514e-19],
    [3.7, 2.5, 0.01, -56680.267916422476, 9.938513824123436e-07],
    [3.7, 2.5, 0.5, -37.157882347475976, 0.09160879607433692],
    [3.7, 2.5, 2.0, -14.351242887845562, 2.2232394147214727],
    [3.7, 2.5, 8.0, 17.95150313433738, -2.2113435609062257],
    [3.7, 2.5, 15.0, 8.94683006131393, -9.526715869907036],
    [3.7, 2.5, 25.0, 0.46311753360994756, -91.60233337428208],
    [3.7, 2.5, 31.0, 0.053100127252789835, -716.2783843369626],
    [3.7, 2.5, 45.0, 0.00020148873563774982, -168697.306066665],
    [3.7, 2.5, 80.0, 4.43842989503566e-11, -699190198400.2589],
    [3.7, 0.3, 1e-06, -0.049194840342563675, 1.58488952739829e-05],
    [3.7, 0.3, 0.01, -0.6167563354761568, 0.024542228601184265],
    [3.7, 0.3, 0.5, -0.6919355693243415, 0.11289819219397869],
    [3.7, 0.3, 2.0, 2.8087917299265035, -0.27073895249722935],
    [3.7, 0.3, 8.0, 3.485184405413098, -0.1251078472887422],
    [3.7, 0.3, 15.0, 5.309047373553817, -0.6233325646719058],
    [3.7, 0.3, 25.0, 0.35020992692964487, -2.139635262745036],
    [3.7, 0.3, 31.0, 0.04264754471208986, -15.169159686774835],
    [3.7, 0.3, 45.0, 0.00017410446042725333, -3267.837016885699],
    [3.7, 0.3, 80.0, 4.098161710495671e-11, -12590294839.300611],
    [6.2, 0.0, 1e-06, 1.396526109252001, 0.0009999938000096725],
    [6.2, 0.0, 0.01, 37.771520850320016, 0.09389604424227685],
    [6.2, 0.0, 0.5, -109.54286436811879, -0.2707988430736348],
    [6.2, 0.0, 2.0, 123.94353991124028, 0.42955694076690193],
    [6.2, 0.0, 8.0, 174.44892945368542, 0.6605670933454422],
    [6.2, 0.0, 15.0, 4.196293040983326, -0.7079363963752884],
    [6.2, 0.0, 25.0, 306.950469476411, 1.5400056102913036],
    [6.2, 0.0, 31.0, 89.52018219661853, 2.8934060168267397],
    [6.2, 0.0, 45.0, 1.3174224656696443, 120.99715948049683],
    [6.2, 0.0, 80.0, 1.7304610146430598e-06, 74080856.84986876],
    [6.2, 0.5, 1e-06, 31.69699484812921, 9.99996900003245e-07],
    [6.2, 0.5, 0.01, 28.376003939980194, 0.00969322764623154],
    [6.2, 0.5, 0.5, -104.5708120930294, 0.03800681257410933],
    [6.2, 0.5, 2.0, 117.90798527461722, -0.01187848724745494],
    [6.2, 0.5, 8.0, 171.9663539738035, -0.009005921805123702],
    [6.2, 0.5, 15.0, 10.41038618752215, -0.2165992795030256],
    [6.2, 0.5, 25.0, 311.2587321530876, 0.08434365499608415],
    [6.2, 0.5, 31.0, 90.43841216317314, 0.7434495131600783],
    [6.2, 0.5, 45.0, 1.3258885813308832, 35.77170529204301],
    [6.2, 0.5, 80.0, 1.7362843835317268e-06, 21979073.037159856],
    [6.2, 1.0, 1e-06, -18677.29497959083, 9.999979333349661e-10],
    [6.2, 1.0, 0.01, -200.23334791872207, 0.0009794959176152877],
    [6.2, 1.0, 0.5, -73.59628992462031, 0.10520510420066762],
    [6.2, 1.0, 2.0, 93.88261645007765, -0.1421087802802561],
    [6.2, 1.0, 8.0, 162.3734675041081, -0.21549436219658832],
    [6.2, 1.0, 15.0, 30.72839196704126, 0.21885470546267755],
    [6.2, 1.0, 25.0, 324.52784077598653, -0.5041912914999341],
    [6.2, 1.0, 31.0, 93.24783688836494, -0.9619477823735436],
    [6.2, 1.0, 45.0, 1.3516079346153682, -41.28774512443169],
    [6.2, 1.0, 80.0, 1.7538711703806385e-06, -25634693.82883942],
    [6.2, 1.5, 1e-06, -12190621.687454507, 9.99998450000986e-13],
    [6.2, 1.5, 0.01, -1257.9851641979203, 9.845982397361255e-05],
    [6.2, 1.5, 0.5, 35.3657401836249, 0.10785931150647445],
    [6.2, 1.5, 2.0, 33.08021552838669, -0.08338169343629934],
    [6.2, 1.5, 8.0, 138.37951719754855, -0.05303532024489371],
    [6.2, 1.5, 15.0, 70.70824132513512, 0.25013242969849897],
    [6.2, 1.5, 25.0, 347.83462078048314, -0.11118356653553696],
    [6.2, 1.5, 31.0, 98.11794365362833, -0.7844778866793893],
    [6.2, 1.5, 45.0, 1.3955635098666617, -39.0381410137431],
    [6.2, 1.5, 80.0, 1.7835752830164995e-06, -24665657.594584562],
    [6.2, 2.5, 1e-06, 34830293691293.87, 9.99998966667142e-19],
    [6.2, 2.5, 0.01, 353755.9663158779, 9.897140809531836e-07],
    [6.2, 2.5, 0.5, 313.0582612257259, 0.07337893800560394],
    [6.2, 2.5, 2.0, -305.01530292781325, 0.6928868665893326],
    [6.2, 2.5, 8.0, -26.196607891592972, 0.5894163982863919],
    [6.2, 2.5, 15.0, 263.97550821121104, -1.0761706704976626],
    [6.2, 2.5, 25.0, 433.4851394137841, 0.5821848813419976],
    [6.2, 2.5, 31.0, 115.40463745927856, 3.1162750725644246],
    [6.2, 2.5, 45.0, 1.5458417721565263, 166.34075982236203],
    [6.2, 2.5, 80.0, 1.8820163925708446e-06, 111110630.76316313],
    [6.2, 0.3, 1e-06, 6.850430907766804, 1.5848870510073915e-05],
    [6.2, 0.3, 0.01, 36.67169094518774, 0.024157165164767222],
    [6.2, 0.3, 0.5, -108.04030456523553, -0.03524335368187562],
    [6.2, 0.3, 2.0, 121.88074688238103, 0.1109872997593464],
    [6.2, 0.3, 8.0, 173.59446459922242, 0.18637121012426422],
    [6.2, 0.3, 15.0, 6.402362786062138, -0.4363658160899919],
    [6.2, 0.3, 25.0, 308.49493266066986, 0.553676471771932],
    [6.2, 0.3, 31.0, 89.84970613979996, 1.6504242221037753],
    [6.2, 0.3, 45.0, 1.3204641498941008, 73.85246636198086],
    [6.2, 0.3, 80.0, 1.7325551961292981e-06, 45274401.66521261],
];
/// (tau_re, tau_im, mu, z_re, z_im, W_re, W_im, M_re, M_im)
pub const WHITTAKER_COMPLEX: &[[f64; 9]] = &[
    [
        0.5,
        0.5,
        0.0,
        2e-05,
        -2e-05,
        -0.009410502736181657,
        -0.03166052829003618,
        0.004913366458121276,
        -0.002035183024150711,
    ],
    [
        0.5,
        0.5,
        0.0,
        0.02,
        -0.02,
        0.1204320387649689,
        -0.42399862552842393,
        0.15228217027219754,
        -0.06308634125383628,
    ],
    [
        0.5,
        0.5,
        0.0,
        0.6,
        -0.6,
        1.1471105758865354,
        -0.04308973211799635,
        0.4006501560621872,
        -0.19735621650895402,
    ],
    [
        0.5,
        0.5,
        0.0,
        2.0,
        -2.0,
        0.36790673278149366,
        0.8913847561815194,
        -0.4127575187940326,
        -0.02378167662124819,
    ],
    [
        0.5,
        0.5,
        0.0,
        8.0,
        -8.0,
        0.011331789730557562,
        -0.09189527754563459,
        6.244476585350857,
        -1.5597121041856776,
    ],
    [
        0.5,
        0.5,
        0.0,
        24.0,
        -24.0,
        3.6802544407186314e-05,
        3.8531842146721784e-05,
        -9603.247718431028,
        -6025.752595914431,
    ],
    [
        0.5,
        0.5,
        0.0,
        40.0,
        -40.0,
        -2.1528567758236136e-08,
        8.178072349178014e-09,
        -3771513.3400349626,
        25989898.980015073,
    ],
    [
        0.5,
        0.5,
        0.0,
        80.0,
        -80.0,
        -2.8448820975789215e-17,
        -6.068918372950553e-17,
        8835416435953913.0,
        1853894333308551.8,
    ],
    [
        0.5,
        -0.5,
        0.0,
        2e-05,
        2e-05,
        -0.009410502736181657,
        0.03166052829003618,
        0.004913366458121276,
        0.002035183024150711,
    ],
    [
        0.5,
        -0.5,
        0.0,
        0.02,
        0.02,
        0.1204320387649689,
        0.42399862552842393,
        0.15228217027219754,
        0.06308634125383628,
    ],
    [
        0.5,
        -0.5,
        0.0,
        0.6,
        0.6,
        1.1471105758865354,
        0.04308973211799635,
        0.4006501560621872,
        0.19735621650895402,
    ],
    [
        0.5,
        -0.5,
        0.0,
        2.0,
        2.0,
        0.36790673278149366,
        -0.8913847561815194,
        -0.4127575187940326,
        0.02378167662124819,
    ],
    [
        0.5,
        -0.5,
        0.0,
        8.0,
        8.0,
        0.011331789730557562,
        0.09189527754563459,
        6.244476585350857,
        1.5597121041856776,
    ],
    [
        0.5,
        -0.5,
        0.0,
        24.0,
        24.0,
        3.6802544407186314e-05,
        -3.8531842146721784e-05,
        -9603.247718431028,
        6025.752595914431,
    ],
    [
        0.5,
        -0.5,
        0.0,
        40.0,
        40.0,
        -2.1528567758236136e-08,
        -8.178072349178014e-09,
        -3771513.3400349626,
        -25989898.980015073,
    ],
    [
        0.5,
        -0.5,
        0.0,
        80.0,
        80.0,
        -2.8448820975789215e-17,
        6.068918372950553e-17,
        8835416435953913.0,
        -1853894333308551.8,
    ],
    [
        0.5,
        0.5,
        0.5,
        2e-05,
        -2e-05,
        0.6536374794003199,
        -0.6097506206127189,
        1.9999800000000005e-05,
        -1.999980000133333e-05,
    ],
    [
        0.5,
        0.5,
        0.5,
        0.02,
        -0.02,
        0.735014194468376,
        -0.6198897283609972,
        0.019800003316714766,
        -0.019801327783351766,
    ],
    [
        0.5,
        0.5,
        0.5,
        0.6,
        -0.6,
        1.3038267036408664,
        0.12257097816881364,
        0.4223289929721849,
        -0.45164670107075955,
    ],
    [
        0.5,
        0.5,
        0.5,
        2.0,
        -2.0,
        0.33836669802236086,
        0.9572678746552817,
        0.20960343234237966,
        -0.8448719031438218,
    ],
    [
        0.5,
        0.5,
        0.5,
        8.0,
        -8.0,
        0.012875138809722565,
        -0.09308064313512035,
        6.466448945667821,
        6.734853000231435,
    ],
    [
        0.5,
        0.5,
        0.5,
        24.0,
        -24.0,
        3.6792688261823066e-05,
        3.8917314006045e-05,
        802.0319732640546,
        -16637.804997319086,
    ],
    [
        0.5,
        0.5,
        0.5,
        40.0,
        -40.0,
        -2.1620345449451685e-08,
        8.136653440180034e-09,
        -36104198.33684309,
        13829529.2255179,
    ],
    [
        0.5,
        0.5,
        0.5,
        80.0,
        -80.0,
        -2.83986090924147e-17,
        -6.082767031658005e-17,
        3951881490581429.0,
        1.271059336985905e+16,
    ],
    [
        0.5,
        -0.5,
        0.5,
        2e-05,
        2e-05,
        0.6536374794003199,
        0.6097506206127189,
        1.9999800000000005e-05,
        1.999980000133333e-05,
    ],
    [
        0.5,
        -0.5,
        0.5,
        0.02,
        0.02,
        0.735014194468376,
        0.6198897283609972,
        0.019800003316714766,
        0.019801327783351766,
    ],
    [
        0.5,
        -0.5,
        0.5,
        0.6,
        0.6,
        1.3038267036408664,
        -0.12257097816881364,
        0.4223289929721849,
        0.45164670107075955,
    ],
    [
        0.5,
        -0.5,
        0.5,
        2.0,
        2.0,
        0.33836669802236086,
        -0.9572678746552817,
        0.20960343234237966,
        0.8448719031438218,
    ],
    [
        0.5,
        -0.5,
        0.5,
        8.0,
        8.0,
        0.012875138809722565,
        0.09308064313512035,
        6.466448945667821,
        -6.734853000231435,
    ],
    [
        0.5,
        -0.5,
        0.5,
        24.0,
        24.0,
        3.6792688261823066e-05,
        -3.8917314006045e-05,
        802.0319732640546,
        16637.804997319086,
    ],
    [
        0.5,
        -0.5,
        0.5,
        40.0,
        40.0,
        -2.1620345449451685e-08,
        -8.136653440180034e-09,
        -36104198.33684309,
        -13829529.2255179,
    ],
    [
        0.5,
        -0.5,
        0.5,
        80.0,
        80.0,
        -2.83986090924147e-17,
        6.082767031658005e-17,
        3951881490581429.0,
        -1.271059336985905e+16,
    ],
    [
        0.5,
        0.5,
        1.0,
        2e-05,
        -2e-05,
        225.08540009987732,
        33.705467313503576,
        5.756443620902155e-08,
        -1.389728426160076e-07,
    ],
    [
        0.5,
        0.5,
        1.0,
        0.02,
        -0.02,
        7.262465092043258,
        1.0949028791455857,
        0.0018081446788277395,
        -0.004365556644896972,
    ],
    [
        0.5,
        0.5,
        1.0,
        0.6,
        -0.6,
        1.7796752804329274,
        0.8606927701202046,
        0.2295585884383826,
        -0.5938035054093084,
    ],
    [
        0.5,
        0.5,
        1.0,
        2.0,
        -2.0,
        0.22193244516803345,
        1.1667224870454465,
        0.1938808326444999,
        -2.3172657284623384,
    ],
    [
        0.5,
        0.5,
        1.0,
        8.0,
        -8.0,
        0.017742702990555942,
        -0.09660966083882863,
        7.535159989080863,
        23.16167300881317,
    ],
    [
        0.5,
        0.5,
        1.0,
        24.0,
        -24.0,
        3.6751179690137066e-05,
        4.008523246825844e-05,
        22780.46199658106,
        -38155.813473995375,
    ],
    [
        0.5,
        0.5,
        1.0,
        40.0,
        -40.0,
        -2.1896617732888658e-08,
        8.00994482434448e-09,
        -102871711.5197709,
        -13568311.82730234,
    ],
    [
        0.5,
        0.5,
        1.0,
        80.0,
        -80.0,
        -2.8246221192787535e-17,
        -6.124395461638643e-17,
        -7145894743367504.0,
        3.5169174768965576e+16,
    ],
    [
        0.5,
        -0.5,
        1.0,
        2e-05,
        2e-05,
        225.08540009987732,
        -33.705467313503576,
        5.756443620902155e-08,
        1.389728426160076e-07,
    ],
    [
        0.5,
        -0.5,
        1.0,
        0.02,
        0.02,
        7.262465092043258,
        -1.0949028791455857,
        0.0018081446788277395,
        0.004365556644896972,
    ],
    [
        0.5,
        -0.5,
        1.0,
        0.6,
        0.6,
        1.7796752804329274,
        -0.8606927701202046,
        0.2295585884383826,
        0.5938035054093084,
    ],
    [
        0.5,
        -0.5,
        1.0,
        2.0,
        2.0,
        0.22193244516803345,
        -1.1667224870454465,
        0.1938808326444999,
        2.3172657284623384,
    ],
    [
        0.5,
        -0.5,
        1.0,
        8.0,
        8.0,
        0.017742702990555942,
        0.09660966083882863,
        7.535159989080863,
        -23.16167300881317,
    ],
    [
        0.5,
        -0.5,
        1.0,
        24.0,
        24.0,
        3.6751179690137066e-05,
        -4.008523246825844e-05,
        22780.46199658106,
        38155.813473995375,
    ],
    [
        0.5,
        -0.5,
        1.0,
        40.0,
        40.0,
        -2.1896617732888658e-08,
        -8.00994482434448e-09,
        -102871711.5197709,
        13568311.82730234,
    ],
    [
        0.5,
        -0.5,
        1.0,
        80.0,
        80.0,
        -2.8246221192787535e-17,
        6.124395461638643e-17,
        -7145894743367504.0,
        -3.5169174768965576e+16,
    ],
    [
        0.5,
        0.5,
        1.5,
        2e-05,
        -2e-05,
        60966.20394675203,
        65347.110705424675,
        -1.599993777787937e-20,
        -7.999960000080001e-10,
    ],
    [
        0.5,
        0.5,
        1.5,
        0.02,
        -0.02,
        61.57428275709446,
        66.0129789522909,
        -1.5937879269477925e-08,
        -0.0007960079910035392,
    ],
    [
        0.5,
        0.5,
        1.5,
        0.6,
        -0.6,
        2.363353866686856,
        3.2008520666195386,
        -0.011519756902173687,
        -0.6181929716265526,
    ],
    [
        0.5,
        0.5,
        1.5,
        2.0,
        -2.0,
        -0.08368656279771074,
        1.5493313301655034,
        -1.067212337039009,
        -4.635039236461516,
    ],
    [
        0.5,
        0.5,
        1.5,
        8.0,
        -8.0,
        0.026678134915250933,
        -0.10236492421707843,
        9.160314550980335,
        70.4491622859873,
    ],
    [
        0.5,
        0.5,
        1.5,
        24.0,
        -24.0,
        3.664102169976382e-05,
        4.20701029701936e-05,
        96344.82373028305,
        -95593.84535932561,
    ],
    [
        0.5,
        0.5,
        1.5,
        40.0,
        -40.0,
        -2.2360157074657355e-08,
        7.790486788914789e-09,
        -295594658.6489042,
        -122770995.86905351,
    ],
    [
        0.5,
        0.5,
        1.5,
        80.0,
        -80.0,
        -2.798636065387488e-17,
        -6.194049612432347e-17,
        -5.064224211741464e+16,
        9.939421990045123e+16,
    ],
    [
        0.5,
        -0.5,
        1.5,
        2e-05,
        2e-05,
        60966.20394675203,
        -65347.110705424675,
        -1.599993777787937e-20,
        7.999960000080001e-10,
    ],
    [
        0.5,
        -0.5,
        1.5,
        0.02,
        0.02,
        61.57428275709446,
        -66.0129789522909,
        -1.5937879269477925e-08,
        0.0007960079910035392,
    ],
    [
        0.5,
        -0.5,
        1.5,
        0.6,
        0.6,
        2.363353866686856,
        -3.2008520666195386,
        -0.011519756902173687,
        0.6181929716265526,
    ],
    [
        0.5,
        -0.5,
        1.5,
        2.0,
        2.0,
        -0.08368656279771074,
        -1.5493313301655034,
        -1.067212337039009,
        4.635039236461516,
    ],
    [
        0.5,
        -0.5,
        1.5,
        8.0,
        8.0,
        0.026678134915250933,
        0.10236492421707843,
        9.160314550980335,
        -70.4491622859873,
    ],
    [
        0.5,
        -0.5,
        1.5,
        24.0,
        24.0,
        3.664102169976382e-05,
        -4.20701029701936e-05,
        96344.82373028305,
        95593.84535932561,
    ],
    [
        0.5,
        -0.5,
        1.5,
        40.0,
        40.0,
        -2.2360157074657355e-08,
        -7.790486788914789e-09,
        -295594658.6489042,
        122770995.86905351,
    ],
    [
        0.5,
        -0.5,
        1.5,
        80.0,
        80.0,
        -2.798636065387488e-17,
        6.194049612432347e-17,
        -5.064224211741464e+16,
        -9.939421990045123e+16,
    ],
    [
        0.5,
        0.5,
        2.5,
        2e-05,
        -2e-05,
        -8367320257.103679,
        22473429863.96905,
        -1.599994666697143e-14,
        -1.5999946666514292e-14,
    ],
    [
        0.5,
        0.5,
        2.5,
        0.02,
        -0.02,
        -8410.010122224803,
        22585.778602765673,
        -1.594697072970264e-05,
        -1.5946514855135873e-05,
    ],
    [
        0.5,
        0.5,
        2.5,
        0.6,
        -0.6,
        -11.791353354254742,
        28.714408929416194,
        -0.3956880341988149,
        -0.38547210604955784,
    ],
    [
        0.5,
        0.5,
        2.5,
        2.0,
        -2.0,
        -2.516744266627791,
        2.766843559817333,
        -12.988866345062505,
        -9.549035680508178,
    ],
    [
        0.5,
        0.5,
        2.5,
        8.0,
        -8.0,
        0.06287459885287817,
        -0.11877626612855251,
        69.24348845757912,
        711.2821542097121,
    ],
    [
        0.5,
        0.5,
        2.5,
        24.0,
        -24.0,
        3.5917116531974596e-05,
        4.874285513899906e-05,
        1350828.7368206573,
        -824721.0929180791,
    ],
    [
        0.5,
        0.5,
        2.5,
        40.0,
        -40.0,
        -2.3868326294995794e-08,
        7.0163377395619905e-09,
        -3036098040.2869515,
        -2373708669.5010095,
    ],
    [
        0.5,
        0.5,
        2.5,
        80.0,
        -80.0,
        -2.710451017698753e-17,
        -6.419206948114397e-17,
        -9.557130662689165e+17,
        9.905293106120641e+17,
    ],
    [
        0.5,
        -0.5,
        2.5,
        2e-05,
        2e-05,
        -8367320257.103679,
        -22473429863.96905,
        -1.599994666697143e-14,
        1.5999946666514292e-14,
    ],
    [
        0.5,
        -0.5,
        2.5,
        0.02,
        0.02,
        -8410.010122224803,
        -22585.778602765673,
        -1.594697072970264e-05,
        1.5946514855135873e-05,
    ],
    [
        0.5,
        -0.5,
        2.5,
        0.6,
        0.6,
        -11.791353354254742,
        -28.714408929416194,
        -0.3956880341988149,
        0.38547210604955784,
    ],
    [
        0.5,
        -0.5,
        2.5,
        2.0,
        2.0,
        -2.516744266627791,
        -2.766843559817333,
        -12.988866345062505,
        9.549035680508178,
    ],
    [
        0.5,
        -0.5,
        2.5,
        8.0,
        8.0,
        0.06287459885287817,
        0.11877626612855251,
        69.24348845757912,
        -711.2821542097121,
    ],
    [
        0.5,
        -0.5,
        2.5,
        24.0,
        24.0,
        3.5917116531974596e-05,
        -4.874285513899906e-05,
        1350828.7368206573,
        824721.0929180791,
    ],
    [
        0.5,
        -0.5,
        2.5,
        40.0,
        40.0,
        -2.3868326294995794e-08,
        -7.0163377395619905e-09,
        -3036098040.2869515,
        2373708669.5010095,
    ],
    [
        0.5,
        -0.5,
        2.5,
        80.0,
        80.0,
        -2.710451017698753e-17,
        6.419206948114397e-17,
        -9.557130662689165e+17,
        -9.905293106120641e+17,
    ],
];
/// (t, Ai, Ai')
pub const AIRY: &[[f64; 3]] = &[
    [-200.0, 0.14889394248381024, -0.260006645433406],
    [-50.0, -0.1618814236123209, 0.968989837276749],
    [-12.5, -0.27627456138116024, -0.41933133041950515],
    [-8.0, -0.0527050503563862, 0.9355609381983065],
    [-7.3, 0.3357703705151473, -0.18009580448329365],
    [-4.1, 0.009676979518714048, -0.802872535418215],
    [-2.5, -0.11232506769296609, 0.6788527342647943],
    [-1.0, 0.5355608832923521, -0.01016056711664521],
    [0.0, 0.3550280538878172, -0.2588194037928068],
    [0.7, 0.18916240039815008, -0.19985119158228049],
    [2.0, 0.03492413042327438, -0.05309038443365363],
    [3.3, 0.0037872884268267547, -0.00714248778588474],
    [6.9, 9.786113339266028e-07, -2.60492608708626e-06],
    [8.0, 4.6922076160992316e-08, -1.3414392979067865e-07],
    [11.0, 4.2262758649603595e-12, -1.4111441246628517e-11],
    [30.0, 3.2082175915504954e-49, -1.759876581432726e-48],
];
/// (n, a_n, a'_n)
pub const AIRY_ZEROS: &[(usize, f64, f64)] = &[
    (1, -2.338107410459767, -1.018792971647471),
    (2, -4.08794944413097, -3.2481975821798366),
    (3, -5.520559828095551, -4.820099211178736),
    (7, -10.040174341558085, -9.535449052433547),
    (20, -20.537332907677566, -20.188631509463374),
    (100, -60.4555572741167, -60.253295964424794),
    (1000, -281.03151961252155, -280.9378080358935),
    (10000, -1304.6284637676947, -1304.5849745557105),
];
