# coding: utf-8
from django.conf import settings as user_settings

from ungas.utils import singleton


@singleton
class Settings:
    """
    Classe de configuration proxy avec valeurs par défaut
    """

    # Valeurs par défaut
    default = dict(
        # Tolérances de vérification
        UNGAS_VERIFY_TOLERANCE=1e-9,
        UNGAS_INTEGRALITY_TOLERANCE=1e-6,
        UNGAS_NORMALIZATION_TOLERANCE=1e-10,
        UNGAS_UNITARITY_TOLERANCE=1e-10,
        UNGAS_DENSITY_TOLERANCE=1e-10,
        UNGAS_PSD_FLOOR=-1e-10,
        # Groupes
        UNGAS_MAX_ORDER=400,
        UNGAS_ASSOCIATIVITY_EXHAUSTIVE_LIMIT=64,
        UNGAS_ASSOCIATIVITY_SAMPLES_FACTOR=10,
        UNGAS_COUNTING_CHECKS=3,
        # Table de caractères numérique (méthode de Burnside)
        UNGAS_EIGEN_SEED=0,
        UNGAS_EIGEN_ATTEMPTS=8,
        UNGAS_EIGEN_SEPARATION=1e-6,
        # Optimisation entre strates
        UNGAS_OPTIMIZE_STARTS=64,
        UNGAS_OPTIMIZE_SEED=0,
        UNGAS_OPTIMIZE_TOLERANCE=1e-10,
        UNGAS_OPTIMIZE_MAX_ITER=500,
        UNGAS_OPTIMIZE_ACCEPT_GRADIENT=1e-6,
        UNGAS_OPTIMIZE_METHOD="torus",
        UNGAS_OPTIMIZE_WORKERS=1,
        # Sorties
        UNGAS_SIGNIFICANT_DIGITS=12,
    )

    def __getattr__(self, item):
        if not user_settings.configured:
            return self.default.get(item, None)
        return getattr(user_settings, item, self.default.get(item, None))


# Proxy de configuration
settings = Settings()
