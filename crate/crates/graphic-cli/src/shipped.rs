//! The shipped example graphics.
//!
//! * `oval` — a convex definite unit circle, sheet on the interior side:
//!   genus 0 at every angle, no events.
//! * `wiggle` — one component with two cusps: a definite 330° circle arc
//!   whose lower-right portion reverses into an indefinite spiral tongue
//!   carrying two negative-slope inflections. One stabilization, one
//!   destabilization (plus the pocket double tangency bridging the dent),
//!   c = 2, and the stable-genus bound is attained with equality.
//! * `cusp-pair` — a definite oval enclosing a crescent whose tips are one
//!   type-one cusp (an event that migrates a tangency) and one type-two
//!   cusp, with one negative-slope indefinite inflection.
//! * `bitangent-pair` — two disjoint definite ovals; the only events are
//!   the negative-slope members of their common tangent lines.

// The control nets below are frozen at full precision.
#![allow(clippy::excessive_precision)]

use graphic_core::geom::circle_arc;
use graphic_core::{
    Component, CubicBez, FoldType, Graphic, Point, Segment, SheetSide, Vertex, VertexKind,
};
use std::f64::consts::PI;

pub const NAMES: [&str; 4] = ["oval", "wiggle", "cusp-pair", "bitangent-pair"];

pub fn by_name(name: &str) -> Option<Graphic> {
    match name {
        "oval" => Some(oval()),
        "wiggle" => Some(wiggle()),
        "cusp-pair" => Some(cusp_pair()),
        "bitangent-pair" => Some(bitangent_pair()),
        _ => None,
    }
}

pub fn all() -> Vec<(&'static str, Graphic)> {
    NAMES.iter().map(|&n| (n, by_name(n).unwrap())).collect()
}

/// A full circle as a welded chain of equal Bézier arcs.
fn circle_chain(
    center: Point,
    radius: f64,
    start_deg: f64,
    sweep_deg: f64,
    n: usize,
) -> Vec<CubicBez> {
    let deg = PI / 180.0;
    let mut out = Vec::with_capacity(n);
    for i in 0..n {
        let a0 = (start_deg + sweep_deg * i as f64 / n as f64) * deg;
        let a1 = (start_deg + sweep_deg * (i + 1) as f64 / n as f64) * deg;
        out.push(circle_arc(center, radius, a0, a1));
    }
    out
}

fn smooth_oval(
    center: Point,
    radius: f64,
    n: usize,
    fold: FoldType,
    sheet: SheetSide,
) -> Component {
    let mut chain = circle_chain(center, radius, 0.0, 360.0, n);
    let first = chain[0].p0;
    chain.last_mut().unwrap().p3 = first;
    let segments = chain
        .into_iter()
        .map(|bez| Segment::new(bez, fold, sheet))
        .collect::<Vec<_>>();
    let vertices = vec![
        Vertex {
            kind: VertexKind::Smooth
        };
        n
    ];
    Component { segments, vertices }
}

fn chain_from(rows: &[[f64; 8]]) -> Vec<CubicBez> {
    rows.iter()
        .map(|r| {
            CubicBez::new(
                Point::new(r[0], r[1]),
                Point::new(r[2], r[3]),
                Point::new(r[4], r[5]),
                Point::new(r[6], r[7]),
            )
        })
        .collect()
}

/// Convex definite oval: the unit circle, sheet side toward the interior.
pub fn oval() -> Graphic {
    Graphic::new(vec![smooth_oval(
        Point::new(0.0, 0.0),
        1.0,
        4,
        FoldType::Definite,
        SheetSide::Left,
    )])
}

/// Definite circle arc with an indefinite tongue between two cusps.
pub fn wiggle() -> Graphic {
    let def = circle_chain(Point::new(0.0, 0.0), 1.0, -30.0, 330.0, 7);
    let tongue = chain_from(WIGGLE_TONGUE);
    let def_n = def.len();
    let mut segments: Vec<Segment> = def
        .into_iter()
        .map(|bez| Segment::new(bez, FoldType::Definite, SheetSide::Left))
        .collect();
    segments.extend(
        tongue
            .into_iter()
            .map(|bez| Segment::new(bez, FoldType::Indefinite, SheetSide::Left)),
    );
    let n = segments.len();
    // Weld the cusp points exactly.
    segments[def_n].bezier.p0 = segments[def_n - 1].bezier.p3;
    segments[n - 1].bezier.p3 = segments[0].bezier.p0;
    let mut vertices = vec![
        Vertex {
            kind: VertexKind::Smooth
        };
        n
    ];
    vertices[def_n - 1] = Vertex {
        kind: VertexKind::Cusp,
    };
    vertices[n - 1] = Vertex {
        kind: VertexKind::Cusp,
    };
    Graphic::new(vec![Component { segments, vertices }])
}

/// Definite oval enclosing a crescent with one type-one and one type-two
/// cusp.
pub fn cusp_pair() -> Graphic {
    let outer = smooth_oval(
        Point::new(0.0, 0.0),
        1.2,
        6,
        FoldType::Definite,
        SheetSide::Left,
    );
    let upper = chain_from(CUSP_PAIR_UPPER);
    let lower = chain_from(CUSP_PAIR_LOWER);
    let upper_n = upper.len();
    let mut segments: Vec<Segment> = upper
        .into_iter()
        .map(|bez| Segment::new(bez, FoldType::Definite, SheetSide::Left))
        .collect();
    segments.extend(
        lower
            .into_iter()
            .map(|bez| Segment::new(bez, FoldType::Indefinite, SheetSide::Left)),
    );
    let n = segments.len();
    segments[upper_n].bezier.p0 = segments[upper_n - 1].bezier.p3;
    segments[n - 1].bezier.p3 = segments[0].bezier.p0;
    let mut vertices = vec![
        Vertex {
            kind: VertexKind::Smooth
        };
        n
    ];
    vertices[upper_n - 1] = Vertex {
        kind: VertexKind::Cusp,
    };
    vertices[n - 1] = Vertex {
        kind: VertexKind::Cusp,
    };
    Graphic::new(vec![outer, Component { segments, vertices }])
}

/// Two disjoint definite ovals; all events are double tangencies.
pub fn bitangent_pair() -> Graphic {
    Graphic::new(vec![
        smooth_oval(
            Point::new(0.0, 0.0),
            1.0,
            4,
            FoldType::Definite,
            SheetSide::Left,
        ),
        smooth_oval(
            Point::new(2.6, -1.4),
            0.75,
            4,
            FoldType::Definite,
            SheetSide::Right,
        ),
    ])
}

const WIGGLE_TONGUE: &[[f64; 8]] = &[
    [
        5.00000000000000111e-1,
        -8.66025403784438597e-1,
        4.85700166346292483e-1,
        -8.74281416593773564e-1,
        4.67716995934657542e-1,
        -8.79491329101196873e-1,
        4.48685613858705812e-1,
        -8.77142080515068812e-1,
    ],
    [
        4.48685613858705812e-1,
        -8.77142080515068812e-1,
        4.29654231782754081e-1,
        -8.74792831928940751e-1,
        4.10331415730400384e-1,
        -8.64625356086207941e-1,
        3.95464005213733649e-1,
        -8.48326544980846142e-1,
    ],
    [
        3.95464005213733649e-1,
        -8.48326544980846142e-1,
        3.73162889438733547e-1,
        -8.23878328322803388e-1,
        3.61017499511766871e-1,
        -7.88118222268366586e-1,
        3.50013875623268744e-1,
        -7.50319849755080925e-1,
    ],
    [
        3.50013875623268744e-1,
        -7.50319849755080925e-1,
        3.35342377105271261e-1,
        -6.99922019737366785e-1,
        3.28232519883479679e-1,
        -6.41320704119013096e-1,
        3.36696703739172432e-1,
        -5.82305125837477622e-1,
    ],
    [
        3.36696703739172432e-1,
        -5.82305125837477622e-1,
        3.45160887594865184e-1,
        -5.23289547555942147e-1,
        3.69112130642716529e-1,
        -4.65675808875280095e-1,
        3.98367199658768101e-1,
        -4.15004542960544731e-1,
    ],
    [
        3.98367199658768101e-1,
        -4.15004542960544731e-1,
        4.27622268674819672e-1,
        -3.64333277045809312e-1,
        4.62061906837559211e-1,
        -3.19820098046307955e-1,
        4.99648557801865678e-1,
        -2.87081969010429483e-1,
    ],
    [
        4.99648557801865678e-1,
        -2.87081969010429483e-1,
        5.37235208766172145e-1,
        -2.54343839974551011e-1,
        5.77099517821892949e-1,
        -2.33439933278965561e-1,
        6.13463353713489590e-1,
        -2.21253000530724137e-1,
    ],
    [
        6.13463353713489590e-1,
        -2.21253000530724137e-1,
        6.49827189605086231e-1,
        -2.09066067782482712e-1,
        6.82743447961435490e-1,
        -2.02358685917866377e-1,
        7.11005197360222274e-1,
        -2.05506617153448035e-1,
    ],
    [
        7.11005197360222274e-1,
        -2.05506617153448035e-1,
        7.28668790734464000e-1,
        -2.07474074175686585e-1,
        7.44031333572527487e-1,
        -2.14153318829502809e-1,
        7.55815168084658318e-1,
        -2.23360221471314124e-1,
    ],
    [
        7.55815168084658318e-1,
        -2.23360221471314124e-1,
        7.79382837108920090e-1,
        -2.41774026754936699e-1,
        7.89604731912219693e-1,
        -2.66728960659187386e-1,
        8.06291898266910723e-1,
        -2.83416127013878361e-1,
    ],
    [
        8.06291898266910723e-1,
        -2.83416127013878361e-1,
        8.26316497892539914e-1,
        -3.03440726639507607e-1,
        8.51669630390537558e-1,
        -3.14280071338238598e-1,
        8.69346969546468284e-1,
        -3.36404285690384552e-1,
    ],
    [
        8.69346969546468284e-1,
        -3.36404285690384552e-1,
        8.82604973913416302e-1,
        -3.52997446454493990e-1,
        8.90934422576698415e-1,
        -3.75110941243393559e-1,
        8.92304042417028542e-1,
        -4.01164285231639772e-1,
    ],
    [
        8.92304042417028542e-1,
        -4.01164285231639772e-1,
        8.93825842239617585e-1,
        -4.30112445218580053e-1,
        8.86665435807783120e-1,
        -4.64250415865731736e-1,
        8.66025403784445702e-1,
        -5.00000000000000777e-1,
    ],
];

const CUSP_PAIR_UPPER: &[[f64; 8]] = &[
    [
        -5.50000000000000044e-1,
        0.00000000000000000e0,
        -5.41430875826642732e-1,
        7.19034893337645517e-3,
        -5.31997640003589956e-1,
        1.31403774376137577e-2,
        -5.18633521997911129e-1,
        1.93426604939691896e-2,
    ],
    [
        -5.18633521997911129e-1,
        1.93426604939691896e-2,
        -5.05269403992232302e-1,
        2.55449435503246197e-2,
        -4.88349494461877975e-1,
        3.20744792314581750e-2,
        -4.58874523407151125e-1,
        3.91007570202494895e-2,
    ],
    [
        -4.58874523407151125e-1,
        3.91007570202494895e-2,
        -4.29399552352424274e-1,
        4.61270348090408039e-2,
        -3.87293992073107884e-1,
        5.41633641477208758e-2,
        -3.13483901757111327e-1,
        5.74221222360237413e-2,
    ],
    [
        -3.13483901757111327e-1,
        5.74221222360237413e-2,
        -2.39673811441114742e-1,
        6.06808803243266068e-2,
        -1.30999480148339564e-1,
        5.88593819878152624e-2,
        1.92938588105320309e-2,
        3.64944242198298394e-2,
    ],
    [
        1.92938588105320309e-2,
        3.64944242198298394e-2,
        1.69587197769403536e-1,
        1.41294664518444302e-2,
        3.61939755673647445e-1,
        -3.15516688163768183e-2,
        5.50000000000000044e-1,
        -1.00000000000000006e-1,
    ],
];

const CUSP_PAIR_LOWER: &[[f64; 8]] = &[
    [
        5.50000000000000044e-1,
        -1.00000000000000006e-1,
        5.23845551329764736e-1,
        -9.04805591903910938e-2,
        4.98458628066992038e-1,
        -7.89478351124304062e-2,
        4.71972099335836059e-1,
        -6.50646107625485609e-2,
    ],
    [
        4.71972099335836059e-1,
        -6.50646107625485609e-2,
        4.49017107768834245e-1,
        -5.30324829926509533e-2,
        4.25253179989628416e-1,
        -3.92067525266485487e-2,
        3.99116936445356452e-1,
        -2.32380904608720691e-2,
    ],
    [
        3.99116936445356452e-1,
        -2.32380904608720691e-2,
        3.70970212628448204e-1,
        -6.04106977465125247e-3,
        3.40265471404214592e-1,
        1.39935685883918644e-2,
        3.03556534583831028e-1,
        3.56271421012515285e-2,
    ],
    [
        3.03556534583831028e-1,
        3.56271421012515285e-2,
        2.66847597763447464e-1,
        5.72607156141112100e-2,
        2.23764082295297095e-1,
        8.02647497453500003e-2,
        1.70744139333474237e-1,
        1.00600213165164043e-1,
    ],
    [
        1.70744139333474237e-1,
        1.00600213165164043e-1,
        1.17724196371651463e-1,
        1.20935676584978058e-1,
        5.46055765312071090e-2,
        1.38321332595556928e-1,
        -1.85971558516556217e-2,
        1.48609305707140232e-1,
    ],
    [
        -1.85971558516556217e-2,
        1.48609305707140232e-1,
        -9.70286548332943283e-2,
        1.59632134040979479e-1,
        -1.88264067808542157e-1,
        1.61867239620487158e-1,
        -2.82202835507382122e-1,
        1.38880569405727100e-1,
    ],
    [
        -2.82202835507382122e-1,
        1.38880569405727100e-1,
        -3.76141603206222086e-1,
        1.15893899190967056e-1,
        -4.70401723905955416e-1,
        6.67908841128608127e-2,
        -5.50000000000000044e-1,
        0.00000000000000000e0,
    ],
];
