import os
import logging


LOGGER_NAME = 'segmentation-refactor-tool'


class Logger:
    _instance = None

    def __new__(cls, log_file_name=None, level=logging.INFO):
        if cls._instance is None:
            cls._instance = super(Logger, cls).__new__(cls)
            cls._instance._initialize(log_file_name, level)
        return cls._instance

    def _initialize(self, log_file_name, level):
        self.logger = logging.getLogger(LOGGER_NAME)
        self.logger.setLevel(level)
        self.logger.propagate = False
        self.log_file = None

        if self.logger.handlers:
            self.logger.handlers.clear()

        self.formatter = logging.Formatter(
            '%(asctime)s - %(levelname)s - %(message)s')

        console_handler = logging.StreamHandler()
        console_handler.setLevel(level)
        console_handler.setFormatter(self.formatter)
        self.logger.addHandler(console_handler)

        if log_file_name:
            self.add_file_handler(log_file_name)

    def add_file_handler(self, log_file_name):
        self.log_file = os.path.join(os.getcwd(), log_file_name)
        try:
            if os.path.exists(self.log_file):
                os.remove(self.log_file)
        except Exception as e:
            self.warning(f"Could not remove existing log file: {e}")

        file_handler = logging.FileHandler(self.log_file)
        file_handler.setLevel(self.logger.level)
        file_handler.setFormatter(self.formatter)
        self.logger.addHandler(file_handler)
        self.info(f"Initializing logger with log file: {self.log_file}")

    def set_level(self, level):
        self.logger.setLevel(level)
        for handler in self.logger.handlers:
            handler.setLevel(level)

    def info(self, message):
        self.logger.info(message)

    def error(self, message):
        self.logger.error(message)

    def warning(self, message):
        self.logger.warning(message)

    def debug(self, message):
        self.logger.debug(message)
