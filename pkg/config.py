import os
from dotenv import load_dotenv

load_dotenv()

class Config:
    # Logging (stderr only; stdout carries reports)
    LOG_LEVEL = os.environ.get('CORKFORGE_LOG_LEVEL', 'WARNING').upper()
    LOG_FORMAT = '%(asctime)s %(levelname)s %(name)s: %(message)s'

    # Family construction defaults
    DEFAULT_FAMILY_SIZE = int(os.environ.get('CORKFORGE_DEFAULT_N', '3'))
    DEFAULT_VARIANT = os.environ.get('CORKFORGE_DEFAULT_VARIANT', 'standard')
    SUPPORTED_VARIANTS = ('standard', 'strengthened', 'nonstein', 'nonstein_minus1')

    # JSON output
    JSON_INDENT = int(os.environ.get('CORKFORGE_JSON_INDENT', '2'))

    # Random example generation
    FUZZ_SEED = int(os.environ.get('CORKFORGE_FUZZ_SEED', '20240611'))
    FUZZ_MAX_ENTRY = int(os.environ.get('CORKFORGE_FUZZ_MAX_ENTRY', '5'))

    # File paths
    OUTPUT_FOLDER = os.environ.get('CORKFORGE_OUTPUT_FOLDER',
                                   os.path.join(os.path.dirname(__file__), 'out'))

    @staticmethod
    def init_folders():
        os.makedirs(Config.OUTPUT_FOLDER, exist_ok=True)
