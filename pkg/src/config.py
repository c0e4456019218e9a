import os

from dotenv import load_dotenv

load_dotenv()


class Config:
    """Base configuration"""

    # Series evaluation
    DEFAULT_TOL = 1e-8
    MAX_SERIES_TERMS = int(os.environ.get('POLYVOL_MAX_TERMS', 10**8))
    SERIES_CHUNK = int(os.environ.get('POLYVOL_SERIES_CHUNK', 1 << 16))
    # frequencies closer than this to a multiple of 2*pi are summed as resonant
    RESONANCE_TOL = 1e-10

    # Side-lengths and subsets
    MAX_SIDES = 24
    MAX_BERNOULLI_DEGREE = 64
    DRIFT_RESET = 1 << 16
    BOUNDARY_TOL = 1e-12
    MAX_WITNESSES = int(os.environ.get('POLYVOL_MAX_WITNESSES', 32))

    # Averaging iteration
    OPTIMIZER_TOL = 1e-10
    OPTIMIZER_MAX_ITER = 100000
    DEFAULT_SEED = int(os.environ.get('POLYVOL_SEED', 1729))

    # Finite-difference step used by the n=4 derivative fallbacks
    FD_STEP = 1e-5

    LOG_LEVEL = os.environ.get('POLYVOL_LOG_LEVEL', 'WARNING')


class DevelopmentConfig(Config):
    """Development configuration"""
    LOG_LEVEL = os.environ.get('POLYVOL_LOG_LEVEL', 'DEBUG')


class ProductionConfig(Config):
    """Production configuration"""
    LOG_LEVEL = os.environ.get('POLYVOL_LOG_LEVEL', 'WARNING')


# Configuration dictionary
config = {
    'development': DevelopmentConfig,
    'production': ProductionConfig,
    'default': ProductionConfig
}


def get_config():
    """Configuration class selected by POLYVOL_ENV"""
    return config.get(os.environ.get('POLYVOL_ENV', 'default'), ProductionConfig)
