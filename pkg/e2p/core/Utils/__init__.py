from e2p.core.Utils.Utils import Utils
from e2p.core.Utils.FileManager import FileManager
