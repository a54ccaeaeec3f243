from e2p.core.Utils.Utils import Utils
from e2p.core.Utils import FileManager
