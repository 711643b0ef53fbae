"""
Global configuration settings for lti_discretize.
"""

import logging
import os

from dotenv import load_dotenv

# Load environment variables from .env file if present
load_dotenv()

logger = logging.getLogger(__name__)


class Settings:
    def __init__(self):
        logger.debug("Initializing lti_discretize settings")

        # Oracle integration defaults
        self.oracle_steps = int(os.getenv('LTI_DISCRETIZE_ORACLE_STEPS', '2000'))
        self.compare_tolerance = float(os.getenv('LTI_DISCRETIZE_COMPARE_TOLERANCE', '1e-8'))

        # CLI logging
        self.log_level = os.getenv('LTI_DISCRETIZE_LOG_LEVEL', 'WARNING').upper()

        # Validate settings
        if self.oracle_steps < 1:
            raise ValueError("LTI_DISCRETIZE_ORACLE_STEPS must be a positive integer")
        if not self.compare_tolerance > 0:
            raise ValueError("LTI_DISCRETIZE_COMPARE_TOLERANCE must be positive")
        if not isinstance(logging.getLevelName(self.log_level), int):
            raise ValueError(f"LTI_DISCRETIZE_LOG_LEVEL '{self.log_level}' is not a logging level")


settings = Settings()
