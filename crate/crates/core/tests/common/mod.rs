//! Frozen reference values shared by the integration tests.

#![allow(dead_code)]

/// `(n, exact rendering, 3-decimal value)` for `λ = 4`, `n = 1..=15`.
pub const LAMBDA4: [(u32, &str, &str); 15] = [
    (1, "-7*pi*log(2) + (119/240)*pi", "-13.685"),
    (2, "-(105/8)*pi*log(10) + (580771/300000)*pi", "-88.862"),
    (3, "-(75/2)*pi*log(20) + (95/21)*pi", "-338.714"),
    (4, "-(5775/64)*pi*log(35) + (4883222845/632481024)*pi", "-983.613"),
    (5, "-(385/2)*pi*log(56) + (17355685/1806336)*pi", "-2404.173"),
    (6, "-(3003/8)*pi*log(84) + (6449434961/1058158080)*pi", "-5206.005"),
    (7, "-(1365/2)*pi*log(120) - (1396715852287/139218750000)*pi", "-10296.556"),
    (8, "-(75075/64)*pi*log(165) - (24757176334716125/493018566815808)*pi", "-18974.368"),
    (9, "-1925*pi*log(220) - (1200329915/9135984)*pi", "-33031.075"),
    (
        10,
        "-(12155/4)*pi*log(286) - (325291539600149215255/1172732412725203616)*pi",
        "-54866.421",
    ),
    (
        11,
        "-4641*pi*log(364) - (31458443588344487293819/60436675052957701680)*pi",
        "-87616.538",
    ),
    (
        12,
        "-(440895/64)*pi*log(455) - (25537984326378849719971131/28270687046875000000000)*pi",
        "-135295.739",
    ),
    (
        13,
        "-9975*pi*log(560) - (1779685691911133495/1202109806542848)*pi",
        "-202952.031",
    ),
    (
        14,
        "-(56525/4)*pi*log(680) - (36234350694889865223938313068785/15613637127259094259005915136)*pi",
        "-296836.555",
    ),
    (
        15,
        "-19635*pi*log(816) - (130243656594168370141034405/37115886521993021558784)*pi",
        "-424587.139",
    ),
];

/// `(n, exact rendering, printed 3-decimal value)` for `λ = 5`, `n = 1..=15`.
///
/// The printed value for `n = 15` is not the rounding of the exact value in
/// the same row, which evaluates to `-4196611.8929190533…`.
pub const LAMBDA5: [(u32, &str, &str); 15] = [
    (1, "-(525/128)*pi*log(5) + (945/1024)*pi", "-17.839"),
    (2, "-(2475/128)*pi*log(15) + (27685925/5225472)*pi", "-147.857"),
    (3, "-(17325/256)*pi*log(35) + (61634724075/3373232128)*pi", "-698.499"),
    (4, "-(25025/128)*pi*log(70) + (5573831525/115605504)*pi", "-2457.981"),
    (5, "-(63063/128)*pi*log(126) + (338107973281463/3173748645888)*pi", "-7150.909"),
    (6, "-(143325/128)*pi*log(210) + (20887195/101376)*pi", "-18162.369"),
    (7, "-(75075/32)*pi*log(330) + (1408430247274269205/3944148534526464)*pi", "-41620.201"),
    (8, "-(294525/64)*pi*log(495) + (806559968327725/1438588584576)*pi", "-87940.792"),
    (
        9,
        "-(546975/64)*pi*log(715) + (29915266041851863399425/37527437207206515712)*pi",
        "-173958.634",
    ),
    (
        10,
        "-(969969/64)*pi*log(1001) + (97664804776687286561309/96698680084732322688)*pi",
        "-325775.232",
    ),
    (
        11,
        "-(6613425/256)*pi*log(1365) + (230209361727271224010045/212679240849405517824)*pi",
        "-582478.486",
    ),
    (
        12,
        "-(2723175/64)*pi*log(1820) + (10188450005911283085/12635587626401792)*pi",
        "-1000899.539",
    ),
    (
        13,
        "-(4352425/64)*pi*log(2380) - (39663465263970548089202600252605/249818194036145508144094642176)*pi",
        "-1661590.212",
    ),
    (
        14,
        "-(6774075/64)*pi*log(3060) - (717231543067734581588054629334401175/306761704661739640893688309874688)*pi",
        "-2676220.464",
    ),
    (
        15,
        "-(5148297/32)*pi*log(3876) - (535111116210266542852402527915814650511/82233794352493419438828330115762176)*pi",
        "-4196611.889",
    ),
];
