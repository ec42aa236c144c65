//! Built-in scenarios, embedded from `scenarios/*.hgl`.

pub struct Builtin {
    pub name: &'static str,
    pub summary: &'static str,
    pub source: &'static str,
}

pub const BUILTINS: &[Builtin] = &[
    Builtin {
        name: "veronese-ext2",
        summary: "Ext^2(R/I^n, R), R = k[U,V,W]/(V^2-UW), I = (U,V): period-2 growth",
        source: include_str!("../scenarios/veronese-ext2.hgl"),
    },
    Builtin {
        name: "veronese-duality",
        summary: "H^0_m(R/I^n) in the same ring, the local-duality route",
        source: include_str!("../scenarios/veronese-duality.hgl"),
    },
    Builtin {
        name: "kodiyalam-tor",
        summary: "Tor_1(R/m^n, R/m) over k[x,y]: degree l(m) - 1",
        source: include_str!("../scenarios/kodiyalam-tor.hgl"),
    },
    Builtin {
        name: "placekeeper-tor",
        summary: "Tor_1(N/X^n N, R/(t)) over k[t,X]/(t^2), N = R/(t): degree equals dim",
        source: include_str!("../scenarios/placekeeper-tor.hgl"),
    },
    Builtin {
        name: "cm-degree",
        summary: "Ext^2(R/m^n, R) in the Veronese ring: a true polynomial of degree d",
        source: include_str!("../scenarios/cm-degree.hgl"),
    },
    Builtin {
        name: "artin-rees-probe",
        summary: "Artin-Rees indices for three (M, N, I) triples, plus l(R/m^n)",
        source: include_str!("../scenarios/artin-rees-probe.hgl"),
    },
    Builtin {
        name: "top-soc",
        summary: "Tor_0(k, Ext^2(R/I^n, R)): minimal generators of the Veronese Ext",
        source: include_str!("../scenarios/top-soc.hgl"),
    },
];

pub fn builtin(name: &str) -> Option<&'static Builtin> {
    BUILTINS.iter().find(|b| b.name == name)
}
