"""Analysis/synthesis transforms between time domain and time-frequency grids.

Conventions used throughout the package (M: channels, F: frequency bins,
T: frames):
    * time signals are real arrays shaped [M, num_samples]
    * spectrograms are complex arrays shaped [M, F, T] with F = window_len//2 + 1
    * frame t of the analysis covers padded samples [t*hop, t*hop + window_len)
      where the padded signal carries window_len - hop leading zeros
"""

from dataclasses import dataclass

import numpy as np

from .errors import ConfigError, InvalidInput


def hann_window(window_len):
    """Periodic Hann window (COLA-exact at hop = window_len/4)."""
    return 0.5 * (1.0 - np.cos(2.0 * np.pi * np.arange(window_len) / window_len))


@dataclass(frozen=True)
class StftConfig:
    window_len: int = 1024
    hop: int = 256
    window_kind: str = "hann"
    sample_rate: int = 16000

    def __post_init__(self):
        if self.window_kind != "hann":
            raise ConfigError(f"unsupported window kind: {self.window_kind!r}")
        w, h = self.window_len, self.hop
        if w <= 0 or h <= 0:
            raise ConfigError("window_len and hop must be positive")
        if w & (w - 1):
            raise ConfigError(f"window_len must be a power of two, got {w}")
        if w % h:
            raise ConfigError(f"hop {h} must divide window_len {w}")
        if h > w // 2:
            raise ConfigError(f"hop {h} exceeds window_len/2 = {w // 2} (COLA violated)")

    @property
    def num_bins(self):
        return self.window_len // 2 + 1

    @property
    def edge_pad(self):
        return self.window_len - self.hop

    def window(self):
        return hann_window(self.window_len)

    def num_frames(self, num_samples):
        return -(-num_samples // self.hop)


@dataclass
class Spectrogram:
    """Complex time-frequency grid, shape [M, F, T]."""

    data: np.ndarray
    config: StftConfig

    def __post_init__(self):
        if self.data.ndim != 3:
            raise InvalidInput(f"spectrogram data must be [M, F, T], got shape {self.data.shape}")
        if self.data.shape[1] != self.config.num_bins:
            raise InvalidInput(
                f"frequency axis {self.data.shape[1]} does not match config "
                f"({self.config.num_bins} bins)")

    @property
    def num_channels(self):
        return self.data.shape[0]

    @property
    def num_bins(self):
        return self.data.shape[1]

    @property
    def num_frames(self):
        return self.data.shape[2]

    def channel(self, m):
        """Single-channel view, shape [1, F, T]."""
        return Spectrogram(self.data[m:m + 1], self.config)


def _frame(padded, window_len, hop, num_frames):
    # padded: [..., L] -> [..., T, window_len]
    view = np.lib.stride_tricks.sliding_window_view(padded, window_len, axis=-1)
    return view[..., ::hop, :][..., :num_frames, :]


def analyze(signal, cfg=None):
    """Forward transform of a multichannel time signal.

    Arguments:
        signal: real array [M, num_samples] (a 1-D array is treated as 1 channel)
        cfg: StftConfig; defaults to the 1024/256 Hann configuration
    Return:
        Spectrogram with data [M, F, T], T = ceil(num_samples / hop)
    """
    cfg = cfg or StftConfig()
    x = np.asarray(signal, dtype=np.float64)
    if x.ndim == 1:
        x = x[None, :]
    if x.ndim != 2:
        raise InvalidInput(f"signal must be [M, num_samples], got shape {x.shape}")
    m, n = x.shape
    if m < 1 or n < cfg.window_len:
        raise InvalidInput(
            f"signal too short: {n} samples, need at least window_len = {cfg.window_len}")
    if not np.all(np.isfinite(x)):
        raise InvalidInput("signal contains non-finite samples")

    t = cfg.num_frames(n)
    pad_left = cfg.edge_pad
    pad_right = t * cfg.hop - n
    padded = np.pad(x, ((0, 0), (pad_left, pad_right)))
    frames = _frame(padded, cfg.window_len, cfg.hop, t)
    spec = np.fft.rfft(frames * cfg.window(), axis=-1)
    return Spectrogram(np.transpose(spec, (0, 2, 1)), cfg)


def synthesize(spec, num_samples=None):
    """Weighted overlap-add inverse of :func:`analyze`.

    The analysis window is reused for synthesis and the overlap-added
    squared-window envelope is divided out, so analyze -> synthesize is an
    exact round trip (up to fp error) on the un-padded sample range.

    Arguments:
        spec: Spectrogram [M, F, T]
        num_samples: output length; defaults to T * hop (the longest signal
            consistent with T frames)
    Return:
        real array [M, num_samples]
    """
    if not isinstance(spec, Spectrogram):
        raise InvalidInput("synthesize expects a Spectrogram")
    cfg = spec.config
    # construction is COLA-checked, but guard against a tampered config object
    if cfg.hop > cfg.window_len // 2 or cfg.window_len % cfg.hop:
        raise ConfigError("config does not satisfy COLA")
    m, f, t = spec.data.shape
    if num_samples is None:
        num_samples = t * cfg.hop
    if num_samples > t * cfg.hop:
        raise InvalidInput(f"{t} frames cover at most {t * cfg.hop} samples")

    window = cfg.window()
    frames = np.fft.irfft(np.transpose(spec.data, (0, 2, 1)), n=cfg.window_len, axis=-1)
    frames *= window

    length = (t - 1) * cfg.hop + cfg.window_len
    out = np.zeros((m, length))
    den = np.zeros(length)
    wsq = window * window
    for k in range(t):
        sl = slice(k * cfg.hop, k * cfg.hop + cfg.window_len)
        out[:, sl] += frames[:, k]
        den[sl] += wsq
    out /= np.maximum(den, 1e-12)

    start = cfg.edge_pad
    return out[:, start:start + num_samples]


def synthesis_ola_envelope(cfg, num_frames):
    """Overlap-added squared-window envelope used by :func:`synthesize`.

    Exposed for the differentiable synthesis path, which must divide by the
    same envelope.
    """
    length = (num_frames - 1) * cfg.hop + cfg.window_len
    den = np.zeros(length)
    wsq = cfg.window() ** 2
    for k in range(num_frames):
        den[k * cfg.hop:k * cfg.hop + cfg.window_len] += wsq
    return np.maximum(den, 1e-12)


def interior_slice(cfg, num_samples):
    """Sample range unaffected by edge padding (used for metric alignment)."""
    lead = cfg.edge_pad
    return slice(lead, max(lead, num_samples - lead))
