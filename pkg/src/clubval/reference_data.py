"""Bundled reference tables.

Verbatim copies of the published datasets the package reproduces:
the J.League club table with its reported firm values, the European
club reference valuations, the acquisition cases used for premium
analysis, and the published inference statistics for the two formulae.
Do not edit by hand; values are transcribed from the published tables.
"""

# (league, club, sns_followers, revenue_meur, player_market_value_meur,
#  reported_fv1_meur, reported_fv2_meur, reported_ratio_pct)
JLEAGUE_TABLE = (
    ("J1", "Hokkaido Consadole Sapporo", 412622, 24.03, 13.98, 71.79, 20.0, 359.0),
    ("J1", "Kashima Antlers", 792968, 40.77, 20.8, 122.14, 30.79, 396.8),
    ("J1", "Urawa Reds", 807734, 54.18, 28.55, 161.39, 40.64, 397.2),
    ("J1", "Kashiwa Reysol", 205307, 30.88, 12.85, 91.03, 17.38, 523.9),
    ("J1", "FC Tokyo", 664305, 35.16, 17.5, 105.26, 25.89, 406.6),
    ("J1", "Kawasaki Frontale", 1276055, 46.53, 22.18, 140.76, 35.31, 398.6),
    ("J1", "Yokohama F. Marinos", 858356, 43.21, 18.65, 129.5, 28.45, 455.1),
    ("J1", "Yokohama FC", 208682, 19.07, 11.64, 56.53, 15.87, 356.2),
    ("J1", "Shonan Bellmare", 311333, 16.51, 15.03, 49.43, 20.73, 238.4),
    ("J1", "Albirex Niigata", 312910, 16.93, 9.5, 50.65, 13.78, 367.6),
    ("J1", "Nagoya Grampus", 748573, 40.61, 17.12, 121.49, 25.89, 469.2),
    ("J1", "Kyoto Sanga F.C.", 171441, 21.92, 16.33, 64.72, 21.56, 300.1),
    ("J1", "Gamba Osaka", 583844, 39.79, 16.95, 118.5, 24.73, 479.2),
    ("J1", "Cerezo Osaka", 1575578, 28.11, 18.79, 88.03, 32.77, 268.6),
    ("J1", "Vissel Kobe", 742724, 42.43, 27.18, 126.81, 38.53, 329.1),
    ("J1", "Sanfrecce Hiroshima", 530245, 26.78, 17.78, 80.26, 25.46, 315.2),
    ("J1", "Avispa Fukuoka", 223352, 18.86, 10.95, 55.96, 15.09, 371.0),
    ("J1", "Sagan Tosu", 267045, 18.41, 8.85, 54.8, 12.69, 431.8),
    ("J2", "Vegalta Sendai", 195377, 17.77, 11.65, 52.68, 15.81, 333.3),
    ("J2", "Blaublitz Akita", 51435, 5.85, 5.18, 17.28, 6.82, 253.3),
    ("J2", "Montedio Yamagata", 160809, 14.61, 9.55, 43.32, 12.96, 334.2),
    ("J2", "Iwaki FC", 87485, 5.13, 0.65, 15.33, 1.32, 1157.8),
    ("J2", "Mito Hollyhock", 131046, 6.83, 3.95, 20.44, 5.73, 356.6),
    ("J2", "Tochigi SC", 105261, 6.94, 6.28, 20.68, 8.52, 242.7),
    ("J2", "Thespa Gunma", 64961, 4.78, 4.58, 14.22, 6.15, 231.3),
    ("J2", "Omiya Ardija", 157217, 17.59, 10.88, 52.0, 14.62, 355.8),
    ("J2", "JEF United Ichihara Chiba", 170435, 17.59, 7.48, 52.05, 10.41, 500.0),
    ("J2", "Tokyo Verdy", 630280, 14.11, 6.98, 43.58, 12.43, 350.5),
    ("J2", "FC Machida Zelvia", 93469, 12.79, 12.0, 37.75, 15.66, 241.1),
    ("J2", "Ventforet Kofu", 122516, 10.43, 9.18, 30.94, 12.27, 252.1),
    ("J2", "Zweigen Kanazawa", 100941, 5.75, 6.68, 17.19, 9.0, 191.1),
    ("J2", "Shimizu S-Pulse", 310083, 33.91, 18.8, 100.29, 25.48, 393.7),
    ("J2", "Jubilo Iwata", 270856, 21.55, 11.8, 64.0, 16.43, 389.5),
    ("J2", "Fujieda MYFC", 59559, 2.7, 3.24, 8.11, 4.43, 183.3),
    ("J2", "Fagiano Okayama", 116314, 12.55, 6.33, 37.11, 8.65, 429.2),
    ("J2", "Renofa Yamaguchi FC", 93151, 7.45, 7.05, 22.13, 9.42, 235.0),
    ("J2", "Tokushima Vortis", 112151, 14.81, 11.65, 43.72, 15.33, 285.3),
    ("J2", "V-Varen Nagasaki", 168653, 13.76, 16.37, 40.85, 21.6, 189.1),
    ("J2", "Roasso Kumamoto", 101617, 6.52, 2.58, 19.44, 3.84, 506.5),
    ("J2", "Oita Trinita", 161032, 12.18, 8.64, 36.2, 11.82, 306.4),
    ("J3", "Vanraure Hachinohe", 29921, 2.67, 2.05, 7.93, 2.76, 287.6),
    ("J3", "Iwate Grulla Morioka", 44261, 4.48, 4.29, 13.26, 5.66, 234.3),
    ("J3", "Fukushima United", 30776, 2.87, 2.39, 8.51, 3.19, 267.0),
    ("J3", "Y.S.C.C. Yokohama", 25568, 1.05, 1.88, 3.17, 2.52, 126.2),
    ("J3", "S.C. Sagami-hara", 137554, 5.08, 2.28, 15.36, 3.67, 418.9),
    ("J3", "Matsumoto Yamaga F.C.", 212459, 10.07, 5.4, 30.22, 8.03, 376.3),
    ("J3", "AC Nagano Parceiro", 50775, 5.05, 3.42, 14.96, 4.6, 325.1),
    ("J3", "Kataller Toyama", 53703, 4.51, 3.55, 13.39, 4.78, 280.0),
    ("J3", "Azul Claro Numazu", 42229, 2.89, 1.86, 8.62, 2.59, 333.0),
    ("J3", "FC Gifu", 104264, 5.85, 4.3, 17.48, 6.02, 290.4),
    ("J3", "FC Osaka", 32822, 3.73, 1.96, 11.02, 2.66, 414.3),
    ("J3", "Nara Club", 35188, 2.86, 1.73, 8.49, 2.38, 356.4),
    ("J3", "Gainare Tottori", 67383, 3.24, 2.92, 9.72, 4.07, 239.0),
    ("J3", "Kamatamare Sanuki", 59808, 2.71, 2.17, 8.14, 3.08, 264.2),
    ("J3", "Ehime FC", 60826, 5.25, 5.58, 15.58, 7.38, 211.1),
    ("J3", "FC Imabari", 57486, 6.97, 6.27, 20.58, 8.23, 250.0),
    ("J3", "Giravanz Kitakyushu", 71613, 6.82, 4.35, 20.2, 5.89, 342.8),
    ("J3", "Tegevajaro Miyazaki", 23804, 2.17, 2.32, 6.42, 3.06, 209.8),
    ("J3", "Kagoshima United FC", 77314, 5.06, 3.77, 15.08, 5.2, 290.2),
    ("J3", "FC Ryukyu", 79501, 10.66, 5.55, 31.46, 7.45, 422.2),
)

# (club, ev_kpmg_meur, fv1_meur, fv2_meur)
EUROPEAN_TABLE = (
    ("Real Madrid", 3184.0, 3283.0, 3500.0),
    ("Manchester United", 2883.0, 2469.0, 2251.0),
    ("Barcelona", 2814.0, 3072.0, 3215.0),
    ("Bayern", 2749.0, 2290.0, 1971.0),
    ("Liverpool", 2556.0, 2139.0, 1928.0),
    ("Manchester City", 2483.0, 2431.0, 2476.0),
    ("Chelsea", 2179.0, 2003.0, 2139.0),
    ("PSG", 2132.0, 2399.0, 2464.0),
    ("Tottenham", 1912.0, 1525.0, 1518.0),
    ("Juventus", 1597.0, 1837.0, 1411.0),
    ("Arsenal", 1584.0, 1454.0, 1994.0),
    ("Atletico Madrid", 1234.0, 1195.0, 828.0),
    ("Dortmund", 1226.0, 1198.0, 888.0),
    ("Inter Milan", 996.0, 1241.0, 1094.0),
    ("AC Milan", 578.0, 925.0, 1065.0),
    ("West Ham", 541.0, 698.0, 647.0),
    ("Leicester", 526.0, 841.0, 430.0),
    ("Schalke", 502.0, 469.0, 74.0),
    ("Napoli", 483.0, 571.0, 744.0),
    ("Ajax", 473.0, 461.0, 395.0),
    ("Lyon", 456.0, 437.0, 299.0),
    ("Atalanta", 454.0, 498.0, 437.0),
    ("Everton", 450.0, 687.0, 507.0),
    ("Eintracht Frankfurt", 428.0, 495.0, 314.0),
    ("Roma", 413.0, 675.0, 596.0),
    ("Sevilla", 390.0, 544.0, 291.0),
    ("Valencia", 385.0, 359.0, 312.0),
    ("Besiktas", 383.0, 286.0, 250.0),
    ("Galatasaray", 344.0, 355.0, 533.0),
    ("Athletic Bilbao", 336.0, 338.0, 359.0),
    ("Benfica", 326.0, 311.0, 536.0),
    ("Porto", 311.0, 484.0, 395.0),
    ("Aston Villa", 308.0, 653.0, 887.0),
    ("Villareal", 303.0, 400.0, 277.0),
    ("Lazio", 302.0, 491.0, 327.0),
    ("Marseille", 195.0, 499.0, 437.0),
    ("Fenerbahce", 184.0, 337.0, 436.0),
)

# (club, pattern, par_value_kyen, stock_price_kyen, price_for_51pct_myen,
#  method_label); a missing price means the amount was never disclosed
TRANSACTION_TABLE = (
    ("FC Tokyo", "capital_increase", 50.0, 50.0, 1200.0, "Par value"),
    ("FC Machida Zelvia", "capital_increase", 50.0, 50.0, 714.0, "Par value"),
    ("Sagan Tosu", "share_transfer", 10.0, 3.0, None, "Net asset"),
    ("Kashima Antlers", "share_transfer", 50.0, 82.7, 1330.0, "Net asset-based"),
)

# Published inference blocks for the two formulae: summary statistics
# plus (variable, coefficient, standard_error, t_stat, p_value) rows.
PUBLISHED_FIT_STATISTICS = {
    "Formula 1": {
        "multiple_r": 0.9878,
        "r_squared": 0.9758,
        "adjusted_r_squared": 0.9466,
        "standard_error": 223.7454,
        "rows": (
            ("sns_followers_m", 3.7233, 0.6486, 5.741, 1.69e-06),
            ("revenue_meur", 2.9233, 0.2284, 12.8016, 9.17e-15),
        ),
    },
    "Formula 2": {
        "multiple_r": 0.9749,
        "r_squared": 0.9505,
        "adjusted_r_squared": 0.9205,
        "standard_error": 320.1838,
        "rows": (
            ("sns_followers_m", 5.7754, 0.7994, 7.2246, 1.96e-08),
            ("player_market_value_meur", 1.2599, 0.1599, 7.8815, 2.89e-09),
        ),
    },
}
