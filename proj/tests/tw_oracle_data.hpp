// Tracy-Widom beta=1 reference values for cross-validation.
// Generated by scripts/gen_tw_oracle.py (Painleve II integration,
// a route independent of the embedded table); do not edit.
#pragma once

namespace tw_oracle {

struct Point { double s; double f1; };

inline constexpr Point kReference[] = {
    {-5, 0.0002825562290208298},
    {-4.9000000000000004, 0.00041397677183584652},
    {-4.7999999999999998, 0.00059933283560635066},
    {-4.7000000000000002, 0.00085735177368248766},
    {-4.5999999999999996, 0.0012118840286992358},
    {-4.5, 0.0016928218392342159},
    {-4.4000000000000004, 0.0023370335716514537},
    {-4.2999999999999998, 0.0031892655851170908},
    {-4.2000000000000002, 0.0043029527146255025},
    {-4.0999999999999996, 0.0057408695390974238},
    {-4, 0.0075755488155243586},
    {-3.8999999999999999, 0.009889391975429972},
    {-3.7999999999999998, 0.012774400370445794},
    {-3.7000000000000002, 0.016331465658511395},
    {-3.6000000000000001, 0.020669173524401022},
    {-3.5, 0.025902096471119618},
    {-3.3999999999999999, 0.032148577772126478},
    {-3.2999999999999998, 0.039528038362828241},
    {-3.2000000000000002, 0.048157869543474063},
    {-3.1000000000000001, 0.058150004628628849},
    {-3, 0.069607289760942825},
    {-2.8999999999999999, 0.082619795760689438},
    {-2.7999999999999998, 0.097261227176221945},
    {-2.7000000000000002, 0.11358559021069377},
    {-2.6000000000000001, 0.13162427715617098},
    {-2.5, 0.15138371133126374},
    {-2.3999999999999999, 0.17284367400138262},
    {-2.2999999999999998, 0.1959564047547224},
    {-2.2000000000000002, 0.22064653126451356},
    {-2.1000000000000001, 0.24681184562739639},
    {-2, 0.27432490504955565},
    {-1.8999999999999999, 0.30303539705044469},
    {-1.8, 0.33277317583555538},
    {-1.7, 0.36335184893530287},
    {-1.6000000000000001, 0.39457277297795135},
    {-1.5, 0.42622930535588804},
    {-1.3999999999999999, 0.45811115475370423},
    {-1.3, 0.49000867764780315},
    {-1.2, 0.52171697917473769},
    {-1.1000000000000001, 0.5530396939177542},
    {-1, 0.58379234377883094},
    {-0.90000000000000002, 0.61380519457156668},
    {-0.80000000000000004, 0.64292555872607304},
    {-0.69999999999999996, 0.67101951706795526},
    {-0.59999999999999998, 0.69797305673476828},
    {-0.5, 0.72369264389950771},
    {-0.40000000000000002, 0.74810526831959534},
    {-0.29999999999999999, 0.77115801133522832},
    {-0.20000000000000001, 0.79281719965005049},
    {-0.10000000000000001, 0.81306721399884652},
    {-0, 0.83190902496793506},
    {0.10000000000000001, 0.8493585281032443},
    {0.20000000000000001, 0.86544474755031553},
    {0.29999999999999999, 0.88020797238320725},
    {0.40000000000000002, 0.89369788301275066},
    {0.5, 0.90597171724217684},
    {0.59999999999999998, 0.91709251710860928},
    {0.69999999999999996, 0.92712748909721465},
    {0.80000000000000004, 0.93614650198247651},
    {0.90000000000000002, 0.94422073876102408},
    {1, 0.95142151207942505},
    {1.1000000000000001, 0.95781924638439442},
    {1.2, 0.96348262480672486},
    {1.3, 0.96847789454744215},
    {1.3999999999999999, 0.97286832124556188},
    {1.5, 0.97671378040997414},
    {1.6000000000000001, 0.98007047240814837},
    {1.7, 0.98299074662367947},
    {1.8, 0.98552302011499504},
    {1.8999999999999999, 0.98771177631951035},
    {2, 0.98959762994781331},
    {2.1000000000000001, 0.99121744510134713},
    {2.2000000000000002, 0.99260449473865175},
    {2.2999999999999998, 0.99378865083106693},
    {2.3999999999999999, 0.99479659582540236},
    {2.5, 0.99565204731455204},
    {2.6000000000000001, 0.99637598906614633},
    {2.7000000000000002, 0.99698690274220791},
    {2.7999999999999998, 0.99750099573732676},
    {2.8999999999999999, 0.99793242155444806},
    {3, 0.99829349001887147},
};

}  // namespace tw_oracle
