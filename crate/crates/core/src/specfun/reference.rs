// Reference values computed with mpmath at 40 significant digits.

/// (m, x, J_m(x), Y_m(x))
pub(super) const REAL_JY: &[(u32, f64, f64, f64)] = &[
    (0, 0.3, 0.9776262465382960892164, -0.8072735778045194912073),
    (0, 1.0, 0.7651976865579665514497, 0.08825696421567695798293),
    (0, 2.5, -0.04838377646819799632729, 0.4980703596152318878275),
    (0, 7.0, 0.3000792705195555966503, -0.02594974396720926488428),
    (0, 11.9, 0.02504944169958964507951, -0.2298332139433750640659),
    (0, 12.1, 0.06966677360680731184901, -0.2184383805509254856511),
    (0, 16.9, -0.1787833878912192170393, -0.07543154755580284691807),
    (0, 17.1, -0.1592853315322653068974, -0.1088190473004299886647),
    (0, 25.0, 0.0962667832759581161735, -0.1272494322680061378343),
    (0, 50.0, 0.05581232766925181500475, -0.09806499547007707902921),
    (1, 0.3, 0.1483188162731040023765, -2.293105138388529123146),
    (1, 1.0, 0.4400505857449335159597, -0.7812128213002887165471),
    (1, 2.5, 0.4970941024642740380108, 0.1459181379667857988788),
    (1, 7.0, -0.004682823482345832699114, -0.3026672370241848700608),
    (1, 11.9, -0.2289832496619240550456, -0.03471149833403060983331),
    (1, 12.1, -0.2157489733769248082679, -0.0787369314513957456156),
    (1, 16.9, -0.08074925425014196997533, 0.1766314430901271780653),
    (1, 17.1, -0.1135188482914351354794, 0.1561739131483648552111),
    (1, 25.0, -0.1253502495802899046518, -0.09882996478323741005333),
    (1, 50.0, -0.09751182812517513766146, -0.05679566856201476794182),
    (2, 0.3, 0.01116586194906396321942, -14.48009401145234189552),
    (2, 1.0, 0.1149034849319004804696, -1.650682606816254391077),
    (2, 2.5, 0.4460590584396172267359, -0.3813358492418032487245),
    (2, 7.0, -0.3014172200859401202786, -0.06052660946827212656165),
    (2, 11.9, -0.06353402147470293049285, 0.2239993486771514323353),
    (2, 12.1, -0.1053277609418362068246, 0.2054240117159840397127),
    (2, 16.9, 0.1692272631278888055878, 0.09633467691558121294384),
    (2, 17.1, 0.1460082732525652921552, 0.1270850020546247070544),
    (2, 25.0, -0.1062948032423813085456, 0.1193430350853471450301),
    (2, 50.0, -0.05971280079425882051121, 0.09579316872759648831154),
    (5, 0.3, 6.304432633771071115795e-7, -101169.6573523119663424),
    (5, 1.0, 0.0002497577302112344313751, -260.4058666258122207162),
    (5, 2.5, 0.01950162513450321988647, -3.830176000740751862959),
    (5, 7.0, 0.3478963247511832851354, 0.06370223524859028579588),
    (5, 11.9, -0.09453817150838469674638, -0.2233058626638330832631),
    (5, 12.1, -0.05197446976659682270238, -0.2343859520764868933723),
    (5, 16.9, -0.1806083027219597017332, 0.08237518941337522374053),
    (5, 17.1, -0.191739845573207622591, 0.04623488598987022284484),
    (5, 25.0, -0.06600799539842299339205, -0.1470579931137226608575),
    (5, 50.0, -0.08140024769656963964397, -0.07854841391308165338606),
    (10, 0.3, 1.585846515700256735911e-15, -20081052684443.47122541),
    (10, 1.0, 2.630615123687453206998e-10, -121618014.2786891892881),
    (10, 2.5, 0.000002224728417398383294769, -14782.84771602106799437),
    (10, 7.0, 0.02353934438826713480709, -1.939923993259790541489),
    (10, 11.9, 0.3020306113648939055785, -0.04071565792742780895033),
    (10, 12.1, 0.2980203628719945456694, -0.005115769460224613027986),
    (10, 16.9, -0.2059035006411969234837, -0.06454431041304033901463),
    (10, 17.1, -0.1910653848513176364386, -0.09610959984794966990728),
    (10, 25.0, -0.07517984394852328384132, -0.1487183904998064975723),
    (10, 50.0, -0.1138478491494693856669, 0.005723897182053513545982),
    (30, 0.3, 7.22374620691944202349e-58, -1.468886140532652937523e+55),
    (30, 1.0, 3.48286979425148290225e-42, -3.048128783225643216155e+39),
    (30, 2.5, 2.895564196207711612188e-30, -3.677143834079384866827e+27),
    (30, 7.0, 5.317260794010017682415e-17, -205216920630494.8602502),
    (30, 11.9, 2.025774715512155648325e-10, -57066197.53664246427298),
    (30, 12.1, 3.208299132484078909206e-10, -36147447.00463769107469),
    (30, 16.9, 0.000002197212285049600315068, -5848.168568419812789391),
    (30, 17.1, 0.000002946497404242177404774, -4385.496765880127893839),
    (30, 25.0, 0.01180902612426901619969, -1.657580909409400335847),
    (30, 50.0, 0.04843425724550941748548, -0.1164572349354414477008),
    (64, 0.3, 1.466470561228370584646e-142, -3.391576182214001690042e+139),
    (64, 1.0, 4.255915220948966079493e-109, -1.168773131252976536535e+106),
    (64, 2.5, 1.225694569353827793055e-83, -4.06087448342568655877e+80),
    (64, 7.0, 4.314920882674632272652e-55, -1.159608386993036700765e+52),
    (64, 11.9, 1.690993757955723916452e-40, -2.993439109674817922906e+37),
    (64, 12.1, 4.822963875362124495367e-40, -1.050176375467981655276e+37),
    (64, 16.9, 5.423507908761339846875e-31, -9.508013928470724365048e+27),
    (64, 17.1, 1.121310414412852370183e-30, -4.60290738114264401825e+27),
    (64, 25.0, 1.083577140530064984905e-20, -498628158080164557.9687),
    (64, 50.0, 0.00006358383300675205856919, -125.499358737963015837),
];

/// (m, z, J_m(z), Y_m(z), H1_m(z))
#[allow(clippy::type_complexity)]
pub(super) const COMPLEX_JYH: &[(u32, (f64, f64), (f64, f64), (f64, f64), (f64, f64))] = &[
    (0, (0.5, 0.5), (0.9960941738478931746546, -0.1249457486470352645809), (-0.2270873580599795238595, 0.61435025350137482195), (0.3817439203465183527046, -0.3520331067070147884404)),
    (0, (3.0, 1.0), (-0.4604921438822584591218, -0.3695650000148635780587), (0.5158752196061702958949, -0.3898867948404073761249), (-0.0706053490418510829969, 0.1463102195913067178362)),
    (0, (3.0, -1.0), (-0.4604921438822584591218, 0.3695650000148635780587), (0.5158752196061702958949, 0.3898867948404073761249), (-0.8503789387226658352466, 0.8854402196210338739536)),
    (0, (0.0, 4.0), (11.30192195213633049636, 0.0), (-0.007104470449471693460041, 11.30192195213633049636), (0.0, -0.007104470449471693460041)),
    (0, (0.0, 15.0), (339649.3732979138795217, 0.0), (-6.251311080178378579677e-8, 339649.3732979138795217), (0.0, -6.251311080178378579677e-8)),
    (0, (1.0, 9.0), (640.2846386712317317719, -882.1366398775955127606), (882.136623917993510239, 640.2846105923437814588), (0.00002807888795031309403886, -0.00001595960200252152947262)),
    (0, (20.0, 2.0), (0.6151104093289580947911, -0.2577492345492364369281), (0.2650695743370664182546, 0.5921836928846681887109), (0.02292671644428990608022, 0.007320339787829981326556)),
    (0, (-4.0, 2.0), (-1.378702234392483848445, -0.3905423570667093786947), (0.3996257860226191883863, -1.428239581436098638817), (0.0495373470436147903715, 0.009083428955909809691588)),
    (0, (0.0, 25.0), (5774560606.466310315771, 0.0), (-2.205353745180637836013e-12, 5774560606.466310315771), (0.0, -2.205353745180637836013e-12)),
    (0, (30.0, -3.0), (-0.8081970500427425503045, -1.214412857436448167713), (-1.220015213715137128655, 0.8036250504103524830397), (-1.611822100453095033344, -2.434428071151585296368)),
    (1, (0.5, 0.5), (0.2652961096054551493495, 0.2340528911128777454803), (-0.9234218419734345418765, 0.6335509584071416526366), (-0.368254848801686503287, -0.6893689508605567963962)),
    (1, (3.0, 1.0), (0.4326156394052396542395, -0.4295057868842435756908), (0.5248610524469606258702, 0.2879750867549189750739), (0.1446405526503206791656, 0.0953552655627170501794)),
    (1, (3.0, -1.0), (0.4326156394052396542395, 0.4295057868842435756908), (0.5248610524469606258702, -0.2879750867549189750739), (0.7205907261601586293134, 0.954366839331204201561)),
    (1, (0.0, 4.0), (0.0, 9.759465153704449909475), (-9.759465153704449909475, 0.007947242219963783832738), (-0.007947242219963783832738, 0.0)),
    (1, (0.0, 15.0), (0.0, 328124.9219702063967337), (-328124.9219702063967337, 6.456425442791557085173e-8), (-6.456425442791557085173e-8, 0.0)),
    (1, (1.0, 9.0), (836.4093482933748926911, 598.3327136877881689065), (-598.3327433623838403841, 836.4093649441841407689), (-0.00001665080924807777409776, -0.00002967459567147752502446)),
    (1, (20.0, 2.0), (0.2797653708456271493521, 0.5844505604848214933786), (-0.6072602073363058872333, 0.2718589681130444198978), (0.007906402732582729454399, -0.02280964685148439385467)),
    (1, (-4.0, 2.0), (0.5073525508045522209079, -1.22630413913100430412), (1.173298222955246628263, 0.5025009042928296638757), (0.004851646511722557032196, -0.05300591617575767585747)),
    (1, (0.0, 25.0), (0.0, 5657865129.878701353104), (-5657865129.878701353104, 2.249036372785724456128e-12), (-2.249036372785724456128e-12, 0.0)),
    (1, (30.0, -3.0), (-1.231531920467692207892, 0.7823329678587521163279), (0.7868208494705189409382, 1.225844271334925938294), (-2.457376191802618146186, 1.569153817329271057266)),
    (3, (0.5, 0.5), (-0.005043552602842861958882, 0.005369045179553621868897), (9.5111855947221197917, 10.77544806692239363415), (-10.78049161952523649611, 9.516554639901673413568)),
    (3, (3.0, 1.0), (0.3385121647743323903118, 0.2062477188287455632354), (-0.5138174828297861219017, 0.3186099052446450382635), (0.01990225952968735204829, -0.3075697640010405586663)),
    (3, (3.0, -1.0), (0.3385121647743323903118, -0.2062477188287455632354), (-0.5138174828297861219017, -0.3186099052446450382635), (0.6571220700189774285752, -0.7200652016585316851372)),
    (3, (0.0, 4.0), (0.0, -3.337275778420344367857), (3.337275778420344367857, -0.01902533377941736920915), (0.01902533377941736920915, 0.0)),
    (3, (0.0, 15.0), (0.0, -249218.4196497033674118), (249218.4196497033674118, -8.353003524360602291671e-8), (8.353003524360602291671e-8, 0.0)),
    (3, (1.0, 9.0), (-547.1601027107188084186, -349.0636493922948631765), (349.063695353785901641, -547.1601259478228223824), (0.00002323710401396383477258, 0.0000459614910384644570226)),
    (3, (20.0, 2.0), (-0.3887435215777830709198, -0.5109836109096742815899), (0.5323239453569270098811, -0.3762162391287396746845), (-0.01252728244904339623532, 0.02134033444725272829121)),
    (3, (-4.0, 2.0), (-0.9399154587768416378497, 0.230429182586658939488), (-0.1615104774271581236841, -0.9891866066567028592002), (0.04927114787986122135049, 0.06891870515950081580385)),
    (3, (0.0, 25.0), (0.0, -4806356106.5065390799), (4806356106.5065390799, -2.630680637586283782929e-12), (2.630680637586283782929e-12, 0.0)),
    (3, (30.0, -3.0), (1.310205398094474461954, -0.6067425436078523495673), (-0.6105025693379407398922, -1.303881470009763715863), (2.614086868104238177817, -1.21724511294579308946)),
];

/// (m, x, K_m(x))
pub(super) const REAL_K: &[(u32, f64, f64)] = &[
    (0, 1e-08, 18.53661225961077838845),
    (0, 0.011261, 4.60251897585558095095),
    (0, 0.5, 0.9244190712276658617819),
    (0, 2.0, 0.1138938727495334356527),
    (0, 2.1, 0.1007837408899669349098),
    (0, 10.0, 0.0000177800623161676518113),
    (0, 24.9, 3.83609652098949205671e-12),
    (0, 25.1, 3.128312714321117099119e-12),
    (0, 60.0, 1.413897840559107809096e-27),
    (1, 1e-08, 99999999.99999990272468),
    (1, 0.011261, 88.77333095240834305919),
    (1, 0.5, 1.656441120003300893696),
    (1, 2.0, 0.1398658818165224272846),
    (1, 2.1, 0.1227464115335078964649),
    (1, 10.0, 0.00001864877345382558459682),
    (1, 24.9, 3.912382436256763316219e-12),
    (1, 25.1, 3.190032318604266033847e-12),
    (1, 60.0, 1.425632026517104323214e-27),
    (2, 1e-08, 19999999999999998.6631),
    (2, 0.011261, 15771.11187914073288658),
    (2, 0.5, 7.550183551240869436568),
    (2, 2.0, 0.2537597545660558629373),
    (2, 2.1, 0.2176850852075934980273),
    (2, 10.0, 0.00002150981700693276873066),
    (2, 24.9, 4.150344106230999168317e-12),
    (2, 25.1, 3.382498556440978920094e-12),
    (2, 60.0, 1.461418908109677953203e-27),
    (7, 1e-08, 4.607999999999999305922e+60),
    (7, 0.011261, 2006649246754204640.25),
    (7, 0.5, 5837182.010352214916993),
    (7, 2.0, 305.5380176829622406619),
    (7, 2.1, 213.5801184507620914513),
    (7, 10.0, 0.000172025794560757395189),
    (7, 24.9, 1.001193668016923248297e-11),
    (7, 25.1, 8.104334757415207074201e-12),
    (7, 60.0, 2.118909030691412670599e-27),
    (20, 1e-08, 6.377706640314568484449e+182),
    (20, 0.011261, 5.93095521599411885265e+61),
    (20, 0.5, 6.665549874417155635172e+28),
    (20, 2.0, 57708568527002410.0495),
    (20, 2.1, 21633090694076404.19598),
    (20, 10.0, 178.7442782077054807839),
    (20, 24.9, 7.254935301589548611435e-9),
    (20, 25.1, 5.601867270061418743003e-9),
    (20, 60.0, 3.748295400687472383662e-26),
];
