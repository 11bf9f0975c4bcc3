//! Sporadic graphs shipped as graph6 literals.
//!
//! Each literal is decoded on demand and checked against its registered
//! order, valency and diameter, and for distance-regularity.

use super::FamilyError;
use crate::graph::{distance_matrix, intersection_array, parse_graph6, Graph};

pub(crate) struct NamedSpec {
    pub name: &'static str,
    pub n: usize,
    pub valency: usize,
    pub diameter: usize,
    pub graph6: &'static str,
}

pub(crate) const REGISTRY: &[NamedSpec] = &[
    NamedSpec { name: "icosahedron", n: 12, valency: 5, diameter: 3, graph6: r"KhFKFCrEk[n_" },
    NamedSpec { name: "dodecahedron", n: 20, valency: 3, diameter: 5, graph6: r"ShCHGD@?K?_@?@?C_GGG@??cG?G?GK_?C" },
    NamedSpec { name: "pappus", n: 18, valency: 3, diameter: 4, graph6: r"QhEGGD@?G__P?@G?_GGO@?CE?AG" },
    NamedSpec { name: "coxeter", n: 28, valency: 3, diameter: 4, graph6: r"[????????????B?K?A_@O?o?EG?Q_?W??o?@S@?D@??W?@?COC?G_G?G_G?COC??" },
    NamedSpec { name: "tutte_8_cage", n: 30, valency: 3, diameter: 4, graph6: r"]hCGGC@GG?_@?@A?_?G@@??E??GG?G?OC??@??GI???_O?@?@?@??A?a???G??@@?O??E?A??G" },
    NamedSpec { name: "foster", n: 90, valency: 3, diameter: 8, graph6: r"~?@YhCGGC@?G?_@?@A?_?G?@??E??G??G?OC??@???G???_O?@???@??A?_???G???@????C?A??G????G???OC????@?????G?????_??O?@?????@????A?_?????H?????@??????C???A??G??????G?????OC??????@?G?????G???????_????O?@???????@??????A?_???????G?@?????@????????C?????A??G????????G???????OCO???????@???G?????G?????????_??????O?@?????????@????????A?_A????????G???@?????@??????????C???????A??G??????????G?????????OC??O???????@?????G?????G???????????_????????O?@???????????@??????????A?_??A????????G?????@?????@????????????C?????????A??GG???????????G???????????OC????O???????@???????G?????I?????????????_??????????O?@?@???????????@????????????A?_????A????????G???????@?????@?O????????????E???????????A??G" },
    NamedSpec { name: "tutte_12_cage", n: 126, valency: 3, diameter: 6, graph6: r"~?@}hCGGC@?G?_@?@??_?G?@??E??G??G??C@?@???G???_??@??O@????_???G???@O???C????G????G????C?C??@?????G?????_??O?@?????@??????_???G?G?????@@?????C??????G????A?G??????C??????@???????G??A????_??????@???????@????????_????_??G???????@????????C?????A??G????????G????????C??????@?@?????????G???G?????_????????@????????O@??????????_A????????G?????????@??????O???C??????????G??????????G??????????C???????C??@??_????????G_??????????_????????O?@???????????@????????????_?????????G?G??O????????@??????@?????C????????????G??????????A?G????????????C????O???????@?G???????????G????????A????_????????????@??C??????????@??????????????_??????????_??G????C????????@???C??????????C???????????A??G??????????????G??????????????C????????????@?@?????A?????????G?????????G?????`??????????????@??????????????O@????????????????_??????A????????G???@???????????@????????????O???C????????????????G?????_??????????G????????????????C?????????????C??@????????_????????G??????_??????????_??????????????O?@?????????????????@?A????????????????_???????????????G?G????????O????????@????????????@?????C???G??????????????G????????????????A?H??????????????????C??????????O???????@???????G???????????G??????????????A????_?C????????????????@????????C??????????@?_??????????????????_????????????????_??G??????????C????????@?????????C??????????E?????????????????A??G" },
    NamedSpec { name: "biggs_smith", n: 102, valency: 3, diameter: 7, graph6: r"~?@ehCGGC@?G?_@?@??_?G?@_?C??G??G??CO?@???G???_??@???@O???_???G???@??G?C????G????G????C????@?????G?A???_????@?????@??????`?????G?????@?????GC??????G???_??G??????C??????@?@?????G???????_??G???@?O?????@????????_???????G???O???@?????O??CC???????G???@????G?????G??C?O??????@?????????G???????@?_??????C?@?????C???@??????????_?????????G??_??????@???????A??C??????????H??????????G??????????C??????@???@???????????G???C???????_????????A?@???????????@????????????_???????????G@??????????@??????O?????C??A?????????G?C??????????G??????G?????C????????????@????@????????G???G?????????_??_?????????@????????????O@????????O?????_?????????C???G????C????????@??????????????CA?????????????G??????????G???G????_?????????C?G????????????@???????????C???G????????????@??_???????????C??@??????????????A@??????C?????????_??????????G????G?????????A?????@????????????_???E?????A??????????G" },
    NamedSpec { name: "shrikhande", n: 16, valency: 6, diameter: 2, graph6: r"OtrTP_XDGVHEWPPQ_rHCl" },
    NamedSpec { name: "clebsch", n: 16, valency: 5, diameter: 2, graph6: r"OsaBA`GP@`dIHWBqAs_sc" },
    NamedSpec { name: "hoffman_singleton", n: 50, valency: 7, diameter: 2, graph6: r"qpT@GSS_X??`_?A@a?a?O?OkA?_?ag@SG_@?@?AK??G`@?@C??cO??O_G_@GCC?K?CGHO?_O_p??OA?G?CGE??_?DA??S?G_C?@AG??c?@?Q??_H?_C?AE?A_?AQ_@A?OCEG??_GC?CA??GAK?G?C?A?O?G?K?KO?OG??cO?G?C?E?A?B?A?D_OG?GC?C?E?C?A?T?GA@?@A`?" },
    NamedSpec { name: "gewirtz", n: 56, valency: 10, diameter: 2, graph6: r"w?TC?_CA?MA_GDa?K???oIWC?dPd?AcC_i?ChS????I`_?P?sH@C?HCGG?D??_COA`?C?O??ACPT?OG@C?DR@AE??KAOA?OOO?Ab?C?M?`Ok??OCg@C@HA_a?C?e??zC@?GcK??G??@``?W@`GAAC?OSg@`?a??EBG@s??o@A?cD????cBS@Ck@?_B_@??A_HO?BC??AABGco_GW?_?oHa?Ac_I??C??K@ALAG?@C?_QAA?WCHOO?PO@c??QIA@_GG" },
    NamedSpec { name: "higman_sims", n: 100, valency: 22, diameter: 2, graph6: r"~?@csaCCA?_C?O?_?_?O?C??_?A??C??C??A???_??C???Ac`@Qc`@OOwH?AO]_SA`gGcW`@_WOc@?UGg@Q?LG?AGdc??SLD??QqAG?H@CQ_?I?kP??Wo?T??G?Iw_??EScG??SiO?GS_HEGOK_gIHECk?OGKh?OYOc?YR?gG?OEYa`A?W?IqW?o@AaPGSH?G@GM_AM?GDBOS@E?CiO@ACd???D[OgQO?BCIG?_]??AWGX@Ab??`@dCCQGRGPJG@GA``HWC@_IOO_sRWC?Ig??tB@KC?`o?oWB_WO?eGAW_KPS?gH?AF?\?H?KADD@?CcGKOAa_a_?bCI?wG@KW??JCSqO??M@O@`AYCa@@G`?GR_TAAGA@O_iO@cOD?IaO?O@hQD?PC_W?KA?qsC@OAS?@BPOD_@AW@G??@hSOAW@CAI?OKGQCoDW?@_PK_aG?FGb?SB__wH_C_o?oT@AOcGKaGS?`O`CSEAF?Y?O_gAH?_mK?@_O_OQ?Sa?k_aAEGGCaOGW?_aHO?Ml??oOOGa_SH_KE?Gc@c?@M@_S?pC_G_GOAK?DOCsGAACpOOGH_`F?OC@OcCGOPDOC?WcCC_CEQGOGBKAAc`G@_c@_@DOD@AKSG?WCEOQ_C_oROCAQ@?XG_MK?COGKsC??`GB??rW?@dAI?`@OSKBOAOP@_e?C?q?c_?T?UAK_AD?EE?AK_Z?_Ge?``?GgC?RCSSA_Cg_Q_OI_@GG?_|??aB@o?`G@@QE?OwH?i_C@QGH@AHA@ggC@QGDOG_DAP?cO`M?Gq?AG@LS?SI?G`PGBI??oWO_AK@C?Fg@?CL@O_ID_O?c@" },
];

/// Names accepted by [`named`].
pub fn named_graphs() -> impl Iterator<Item = &'static str> {
    REGISTRY.iter().map(|s| s.name)
}

/// Aliases with hyphens are accepted (`tutte-8-cage`).
pub fn named(name: &str) -> Result<Graph, FamilyError> {
    let key = name.trim().to_ascii_lowercase().replace('-', "_");
    let spec = REGISTRY.iter().find(|s| s.name == key).ok_or_else(|| FamilyError::UnknownNamed(name.to_string()))?;
    decode_checked(spec)
}

pub(crate) fn decode_checked(spec: &NamedSpec) -> Result<Graph, FamilyError> {
    let fail = |reason: String| FamilyError::NamedCheck { name: spec.name.to_string(), reason };
    let g = parse_graph6(spec.graph6).map_err(|e| fail(e.to_string()))?;
    if g.n() != spec.n {
        return Err(fail(format!("{} vertices, registered {}", g.n(), spec.n)));
    }
    if g.valency() != Some(spec.valency) {
        return Err(fail(format!("valency {:?}, registered {}", g.valency(), spec.valency)));
    }
    let dm = distance_matrix(&g);
    if !dm.is_connected() || dm.diameter() != spec.diameter {
        return Err(fail(format!("diameter {}, registered {}", dm.diameter(), spec.diameter)));
    }
    match intersection_array(&g) {
        Ok(Some(_)) => Ok(g),
        _ => Err(fail("not distance-regular".into())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_literal_passes_its_checks() {
        for spec in REGISTRY {
            decode_checked(spec).unwrap_or_else(|e| panic!("{e}"));
        }
    }

    #[test]
    fn corrupted_literal_is_rejected() {
        let spec = NamedSpec { name: "broken", n: 12, valency: 5, diameter: 3, graph6: "KhFKFCrEk[nO" };
        assert!(matches!(decode_checked(&spec), Err(FamilyError::NamedCheck { .. })));
    }

    #[test]
    fn lookup() {
        assert_eq!(named("Tutte-8-cage").unwrap().n(), 30);
        assert!(matches!(named("nonesuch"), Err(FamilyError::UnknownNamed(_))));
    }
}
