//! Float functions that need `libm` when built without `std`.

macro_rules! shim {
    ($name:ident ( $($arg:ident),+ ) => $libm:ident) => {
        #[cfg(feature = "std")]
        #[inline]
        pub(crate) fn $name($($arg: f64),+) -> f64 {
            shim!(@std $name, $($arg),+)
        }
        #[cfg(not(feature = "std"))]
        #[inline]
        pub(crate) fn $name($($arg: f64),+) -> f64 {
            libm::$libm($($arg),+)
        }
    };
    (@std $name:ident, $x:ident) => { $x.$name() };
    (@std $name:ident, $x:ident, $y:ident) => { $x.$name($y) };
}

shim!(sqrt(x) => sqrt);
shim!(sin(x) => sin);
shim!(cos(x) => cos);
shim!(tan(x) => tan);
shim!(asin(x) => asin);
shim!(atan2(y, x) => atan2);
shim!(abs(x) => fabs);

#[inline]
pub(crate) fn hypot(x: f64, y: f64) -> f64 {
    sqrt(x * x + y * y)
}

/// Small integer power; avoids `f64::powi`, which needs `std`.
#[inline]
pub(crate) fn powi(x: f64, n: u32) -> f64 {
    let mut out = 1.0;
    for _ in 0..n {
        out *= x;
    }
    out
}

#[inline]
pub(crate) fn sin_cos(x: f64) -> (f64, f64) {
    (sin(x), cos(x))
}
