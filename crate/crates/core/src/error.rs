use core::fmt;

/// Errors shared by all modules of the crate.
#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// A signal must contain at least one sample.
    EmptySignal,
    /// An image must have at least one row and one column.
    EmptyImage,
    /// An input contained NaN or an infinity.
    NotFinite,
    /// A buffer length does not match the declared dimensions.
    BufferSizeMismatch { expected: usize, got: usize },
    /// An inverse transform left too much imaginary residue to be collapsed
    /// back to real samples.
    NonRealInverse { max_imag: f64 },
    /// 1-D kernels must have odd length so the center sample is defined.
    EvenKernel { len: usize },
    /// 2-D kernels must be odd in both dimensions.
    EvenKernelDims { rows: usize, cols: usize },
    /// The kernel does not fit in the signal it should convolve.
    KernelLongerThanSignal { kernel: usize, signal: usize },
    /// The kernel does not fit in the image it should convolve.
    KernelExceedsImage {
        kernel: (usize, usize),
        image: (usize, usize),
    },
    /// Two operands have incompatible shapes.
    DimensionMismatch {
        left: (usize, usize),
        right: (usize, usize),
    },
    /// Dense matrices are verification devices; construction past the size
    /// guard is refused rather than silently slow.
    MatrixTooLarge { rows: usize, cols: usize },
    /// Zero-sized matrix requested.
    EmptyMatrix,
    /// A permutation shift must be smaller than the matrix it acts on.
    ShiftOutOfRange { shift: usize, size: usize },
    /// The defocus disk does not fit inside the requested mask.
    RadiusTooLarge { radius: f64, size: (usize, usize) },
    /// The rasterized motion line leaves the mask.
    LineExceedsMask,
    /// A parameter that must be strictly positive was not.
    NonPositiveParam { name: &'static str },
    /// A parameter that must be non-negative was negative.
    NegativeParam { name: &'static str },
    /// Every restoration denominator vanished and no guard was configured.
    SingularSpectrum,
}

pub type Result<T> = core::result::Result<T, Error>;

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::EmptySignal => write!(f, "empty signal"),
            Error::EmptyImage => write!(f, "empty image"),
            Error::NotFinite => write!(f, "input contains a non-finite value"),
            Error::BufferSizeMismatch { expected, got } => {
                write!(f, "buffer holds {got} values, dimensions require {expected}")
            }
            Error::NonRealInverse { max_imag } => {
                write!(f, "non-real inverse (imaginary residue {max_imag:e})")
            }
            Error::EvenKernel { len } => {
                write!(f, "kernel length must be odd (got {len})")
            }
            Error::EvenKernelDims { rows, cols } => {
                write!(f, "kernel dimensions must be odd (got {rows}x{cols})")
            }
            Error::KernelLongerThanSignal { kernel, signal } => {
                write!(f, "kernel longer than signal ({kernel} > {signal})")
            }
            Error::KernelExceedsImage { kernel, image } => write!(
                f,
                "kernel {}x{} exceeds image {}x{}",
                kernel.0, kernel.1, image.0, image.1
            ),
            Error::DimensionMismatch { left, right } => write!(
                f,
                "dimension mismatch: {}x{} vs {}x{}",
                left.0, left.1, right.0, right.1
            ),
            Error::MatrixTooLarge { rows, cols } => write!(
                f,
                "dense matrix {rows}x{cols} exceeds the verification size guard"
            ),
            Error::EmptyMatrix => write!(f, "matrix dimensions must be at least 1"),
            Error::ShiftOutOfRange { shift, size } => {
                write!(f, "shift {shift} out of range for size {size}")
            }
            Error::RadiusTooLarge { radius, size } => write!(
                f,
                "radius too large for mask (R={radius}, mask {}x{})",
                size.0, size.1
            ),
            Error::LineExceedsMask => write!(f, "motion line exits the mask"),
            Error::NonPositiveParam { name } => write!(f, "{name} must be positive"),
            Error::NegativeParam { name } => write!(f, "{name} must be non-negative"),
            Error::SingularSpectrum => write!(f, "singular spectrum"),
        }
    }
}

impl core::error::Error for Error {}
