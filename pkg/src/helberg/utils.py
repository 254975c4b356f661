import sys
from typing import Dict, Final, Optional


def memstats() -> Optional[Dict[str, float]]:
    """Resident, virtual and peak memory of this process in MiB, or None without psutil."""
    MiB: Final = 2**20
    try:
        import psutil
    except ImportError:
        return None
    process = psutil.Process()
    meminfo = process.memory_info()
    res = {"rss": meminfo.rss / MiB, "vms": meminfo.vms / MiB}
    if sys.platform == "win32":
        res["maxrss"] = meminfo.peak_wset / MiB
    else:
        import resource  # Since it doesn't exist on Windows.

        rusage = resource.getrusage(resource.RUSAGE_SELF)
        factor = 1 if sys.platform == "darwin" else 1024
        res["maxrss"] = rusage.ru_maxrss * factor / MiB
    return res


def print_memstats() -> bool:
    stats = memstats()
    if stats is None:
        return False
    print("Memory stats:")
    for key, value in stats.items():
        print(f"  {key:12.12s}: {value:10.0f} MiB")
    return True
