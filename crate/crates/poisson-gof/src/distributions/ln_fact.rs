//! ln(k!) for k = 0..=170 as double-double (hi, lo) pairs, so that
//! hi + lo reproduces ln(k!) to well below one f64 ulp. Values beyond the
//! table come from the Stirling series in `poisson.rs`.

// The k = 2 entry is of course ln 2 itself; the table is generated as a
// whole, so spelling it via the stdlib constant would be noise.
#![allow(clippy::approx_constant)]

pub(crate) const LN_FACT: [(f64, f64); 171] = [
    (0.0, 0.0),
    (0.0, 0.0),
    (0.6931471805599453, 2.3190468138462996e-17),
    (1.791759469228055, 4.349979825096335e-17),
    (3.1780538303479458, -1.3216387039714197e-16),
    (4.787491742782046, 1.8268155143874837e-16),
    (6.579251212010101, -2.179078601603509e-16),
    (8.525161361065415, -3.667166030063331e-16),
    (10.60460290274525, -6.302121059784911e-16),
    (12.801827480081469, 5.206295788716661e-16),
    (15.104412573075516, -5.84624463166684e-16),
    (17.502307845873887, -7.099828843090002e-16),
    (19.987214495661885, 1.4661311288682236e-15),
    (22.552163853123425, -1.6450514375919355e-15),
    (25.19122118273868, 1.6710216640385304e-15),
    (27.89927138384089, 1.2290202987493117e-15),
    (30.671860106080672, 8.776929614531009e-16),
    (33.50507345013689, -1.871849264001138e-15),
    (36.39544520803305, 9.675174259252172e-16),
    (39.339884187199495, -6.110776922796771e-16),
    (42.335616460753485, -2.780672924182951e-17),
    (45.38013889847691, 3.988053703372669e-16),
    (48.47118135183523, -3.3670985639296026e-15),
    (51.60667556776438, -3.3513402040623198e-15),
    (54.78472939811232, 5.132988141911019e-16),
    (58.00360522298052, 2.0311680775630077e-15),
    (61.261701761002, 6.085105161790465e-16),
    (64.55753862700634, -6.54701115354697e-15),
    (67.88974313718154, -5.095126725640807e-15),
    (71.25703896716801, -5.6547469778977255e-15),
    (74.65823634883016, 6.249917698290756e-15),
    (78.0922235533153, 3.559518675496083e-15),
    (81.55795945611504, -5.7614246931254326e-15),
    (85.05446701758152, 1.7940650857583317e-15),
    (88.58082754219768, -2.8196658134202105e-15),
    (92.1361756036871, -4.331830851799891e-16),
    (95.7196945421432, 5.419949310220628e-16),
    (99.33061245478743, -6.938335146684165e-16),
    (102.96819861451381, 2.968810051003388e-15),
    (106.63176026064346, -1.343308512431943e-15),
    (110.32063971475739, 4.4812011344826036e-15),
    (114.0342117814617, -3.658684692245571e-15),
    (117.77188139974507, 2.0091660912102236e-15),
    (121.53308151543864, -4.613376975683718e-15),
    (125.3172711493569, -3.1380422260738894e-15),
    (129.12393363912722, -1.228265909537779e-15),
    (132.95257503561632, -1.0182123580995801e-14),
    (136.80272263732635, 1.3954035745823506e-14),
    (140.67392364823425, 8.849058732751623e-15),
    (144.5657439463449, -9.212127146942847e-15),
    (148.47776695177302, 1.1757835515507762e-14),
    (152.40959258449735, 1.1360070971878852e-14),
    (156.3608363030788, -1.3243057336032417e-14),
    (160.3311282166309, 5.72179790441396e-15),
    (164.32011226319517, 1.0912942276165645e-14),
    (168.32744544842765, -8.879793890924716e-16),
    (172.3527971391628, 1.2910571080291391e-14),
    (176.39584840699735, 6.5783262863108246e-15),
    (180.45629141754378, -1.00563373548724e-14),
    (184.53382886144948, 1.1893610811486773e-14),
    (188.6281734236716, -6.487622616453056e-15),
    (192.7390472878449, 4.953539271507867e-15),
    (196.86618167289, -1.3811903140213112e-14),
    (201.00931639928152, 1.0282768713994318e-14),
    (205.1681994826412, -9.023633283515003e-16),
    (209.34258675253685, -1.0360038620726709e-14),
    (213.53224149456327, -4.668737515567247e-15),
    (217.73693411395422, 7.212916738541035e-15),
    (221.95644181913033, 7.349971656381903e-16),
    (226.1905483237276, -4.002894150270199e-15),
    (230.43904356577696, -3.4806000957542814e-15),
    (234.70172344281826, 4.477214973033303e-15),
    (238.97838956183432, 3.588204315511051e-15),
    (243.2688490029827, 9.095296219037938e-15),
    (247.57291409618688, 5.9952790996231564e-15),
    (251.8904022097232, 2.7594986872193898e-15),
    (256.22113555000954, -9.652901136035113e-15),
    (260.5649409718632, -1.3479781978823912e-14),
    (264.9216497985528, 2.2976474929622466e-14),
    (269.2910976510198, 1.142627099895874e-14),
    (273.6731242856937, 1.5386591972148984e-14),
    (278.0675734403661, 2.47937026994503e-14),
    (282.4742926876304, 5.787734837958186e-16),
    (286.893133295427, 2.015370840335316e-15),
    (291.3239500942703, 2.002988766526881e-14),
    (295.76660135076065, -2.8145997752905985e-14),
    (300.22094864701415, -2.242187477832223e-14),
    (304.6868567656687, -6.418862633551813e-15),
    (309.1641935801469, 2.161399287273772e-14),
    (313.65282994987905, 1.2928984656414701e-14),
    (318.1526396202093, 2.718542701442851e-14),
    (322.66349912672615, 2.570179254452262e-14),
    (327.1852877037752, 1.4883746199340294e-14),
    (331.7178871969285, 3.3427014316894747e-16),
    (336.26118197919845, 2.260624079626395e-14),
    (340.815058870799, -3.082415441858496e-15),
    (345.37940706226686, -1.0051581128654683e-14),
    (349.95411804077025, -1.715376337892438e-14),
    (354.5390855194408, 1.976428092846486e-14),
    (359.1342053695754, 1.249838958769947e-15),
    (363.73937555556347, 2.035561294749625e-14),
    (368.35449607240474, 6.80472363004697e-15),
    (372.979468885689, 4.542770412693757e-15),
    (377.61419787391867, -1.3309881730125544e-14),
    (382.25858877306, 1.70662201490469e-14),
    (386.91254912321756, -6.6172288712915584e-15),
    (391.5759882173296, 1.0483437695430516e-14),
    (396.24881705179155, -2.1984000934124987e-14),
    (400.93094827891576, -1.8657045236097604e-14),
    (405.6222961611449, -1.3078724530527679e-14),
    (410.32277652693733, -2.67438348695101e-14),
    (415.03230672824964, 2.793823797028759e-15),
    (419.7508055995447, 1.472818559268832e-14),
    (424.4781934182571, -1.749442896110244e-14),
    (429.21439186665157, 2.7308470015966966e-15),
    (433.9593239950148, 7.058253671950434e-15),
    (438.71291418612117, 1.6981110787446913e-14),
    (443.47508812091894, 8.099151906349074e-16),
    (448.2457727453846, -7.52603474713423e-15),
    (453.0248962384961, 9.115539517968303e-15),
    (457.81238798127816, 1.729182684670818e-14),
    (462.6081785268749, 2.769925104082505e-14),
    (467.4121995716082, -1.9567194605746346e-14),
    (472.2243839269806, 1.727726139495682e-14),
    (477.04466549258564, -3.3523696904884624e-15),
    (481.87297922988796, -2.594456154703411e-14),
    (486.7092611368394, -3.714078366550982e-15),
    (491.553448223298, -1.860666171319767e-15),
    (496.40547848721764, -1.490998688738989e-14),
    (501.2652908915793, -4.969897557256498e-15),
    (506.1328253420349, -1.6291761523356008e-14),
    (511.008022665236, 1.4272158439089546e-14),
    (515.8908245878224, -1.0322438559879303e-14),
    (520.7811737160441, 2.8806364885275583e-14),
    (525.679013515995, 1.0402121035255554e-14),
    (530.5842882944335, 2.8874529748818994e-14),
    (535.4969431801695, 2.0532421502191848e-14),
    (540.4169241059976, 4.6131459616760925e-14),
    (545.3441777911548, 3.9529379627128233e-14),
    (550.2786517242855, 5.5781769411128246e-14),
    (555.2202941468948, 2.601816536151585e-14),
    (560.169054037273, 5.250610237016049e-14),
    (565.1248810948744, -5.508710895639226e-14),
    (570.0877257251342, 1.4506980471415534e-14),
    (575.0575390247102, 1.175378114016898e-14),
    (580.0342727671308, -2.0021327589606493e-14),
    (585.0178793888391, 1.2043285070600098e-14),
    (590.0083119756179, -3.666123127269042e-15),
    (595.005524249382, -3.7052038350812133e-14),
    (600.0094705553274, 2.862763070862112e-15),
    (605.0201058494237, 2.618450341513805e-14),
    (610.0373856862386, -1.3742309432483183e-14),
    (615.0612662070849, -5.6440607359865996e-14),
    (620.0917041284773, 2.356824639138438e-15),
    (625.128656730891, -3.3342448773746644e-15),
    (630.1720818478102, -8.818422947283886e-15),
    (635.2219378550598, -3.1069773573369826e-14),
    (640.278183660408, 5.1001997173422213e-14),
    (645.340778693435, -1.9255814291773832e-14),
    (650.4096828956552, 2.060818630497875e-15),
    (655.4848567108891, 4.1569509299638154e-15),
    (660.5662610758735, 1.645839842278687e-14),
    (665.653857411106, -3.284209838444413e-14),
    (670.7476076119127, -3.727828966964713e-14),
    (675.8474740397369, -6.513988698217894e-15),
    (680.9534195136374, 4.088028617915733e-14),
    (686.065407301994, -1.6390723998835486e-14),
    (691.1834011144108, -4.6032539552775565e-14),
    (696.307365093814, -2.9882211401566375e-14),
    (701.437263808737, 4.2055124399124327e-14),
    (706.5730622457874, -7.984949692774774e-15),
];
