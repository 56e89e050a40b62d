"""
Coloured console output for the CLI, the fuzz runner and the test runner
"""
import sys
from colorama import init, Fore, Style
from utils.config import get_settings

init(autoreset=True)

_verbose_override = None


def set_verbose(enabled: bool):
    """Force progress messages on or off regardless of SIMISCALC_VERBOSE"""
    global _verbose_override
    _verbose_override = enabled


def is_verbose() -> bool:
    if _verbose_override is not None:
        return _verbose_override
    return get_settings().verbose


def print_section(title: str, stream=None):
    """Print a section header"""
    stream = stream or sys.stdout
    print(f"\n{Fore.CYAN}{'='*70}", file=stream)
    print(f"{title}", file=stream)
    print(f"{'='*70}{Style.RESET_ALL}\n", file=stream)


def print_status(name: str, passed: bool, message: str = "", stream=None):
    """Print a ✓/✗ status line"""
    stream = stream or sys.stdout
    if passed:
        print(f"✓ {Fore.GREEN}{name}{Style.RESET_ALL}", file=stream)
    else:
        print(f"✗ {Fore.RED}{name}{Style.RESET_ALL}", file=stream)
    if message:
        print(f"  {message}", file=stream)


def info(message: str):
    """Progress message, shown only in verbose mode"""
    if is_verbose():
        print(f"{Fore.CYAN}{message}{Style.RESET_ALL}", file=sys.stderr)


def success(message: str):
    print(f"{Fore.GREEN}✓ {message}{Style.RESET_ALL}", file=sys.stderr)


def warn(message: str):
    print(f"{Fore.YELLOW}⚠ {message}{Style.RESET_ALL}", file=sys.stderr)


def error(message: str):
    print(f"{Fore.RED}Error: {message}{Style.RESET_ALL}", file=sys.stderr)
