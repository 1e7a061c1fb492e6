"""Optional on-disk cache for V^0 matrices and the zeta memo.

Enabled by setting DUNKL_CACHE_DIR.  The cache is advisory: every entry is a
pure function of its key, a miss recomputes, and any unreadable or
mismatched file is ignored.  Files are pickles behind a magic header carrying
FORMAT_VERSION, so a format change invalidates old entries.
"""
import hashlib
import os
import pickle
import tempfile

FORMAT_VERSION = 1
MAGIC = b"DUNKLCACHE"
ENV = "DUNKL_CACHE_DIR"


def cache_dir():
    d = os.environ.get(ENV)
    return d or None


def _path(root, namespace, key):
    h = hashlib.sha256(repr(key).encode()).hexdigest()
    return os.path.join(root, f"v{FORMAT_VERSION}", namespace, h[:2], h + ".bin")


def load(namespace, key):
    root = cache_dir()
    if root is None:
        return None
    path = _path(root, namespace, key)
    try:
        with open(path, "rb") as fh:
            head = fh.read(len(MAGIC) + 2)
            if head[: len(MAGIC)] != MAGIC or int.from_bytes(head[len(MAGIC):], "big") != FORMAT_VERSION:
                return None
            stored_key, value = pickle.load(fh)
    except (OSError, EOFError, pickle.UnpicklingError, AttributeError, ImportError, ValueError):
        return None
    # hash collisions are not trusted
    return value if stored_key == repr(key) else None


def store(namespace, key, value):
    root = cache_dir()
    if root is None:
        return
    path = _path(root, namespace, key)
    try:
        os.makedirs(os.path.dirname(path), exist_ok=True)
        fd, tmp = tempfile.mkstemp(dir=os.path.dirname(path))
        with os.fdopen(fd, "wb") as fh:
            fh.write(MAGIC + FORMAT_VERSION.to_bytes(2, "big"))
            pickle.dump((repr(key), value), fh, protocol=pickle.HIGHEST_PROTOCOL)
        os.replace(tmp, path)
    except OSError:
        pass


def context_key(ctx):
    """Stable description of a context: root coordinates plus kappa values."""
    roots = tuple(tuple(str(x) for x in v) for v in ctx.rs.positive)
    return (roots, ctx.kappa.mode, tuple(str(v) for v in ctx.kappa.values))
