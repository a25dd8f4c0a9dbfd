import shutil
from pathlib import Path
from typing import Optional, Union

import requests
from loguru import logger

from .pipeline import read_graphs


class FetchError(Exception):
    """Raised when a dataset can't be downloaded."""

    def __init__(self, message="Dataset download failed."):
        self.message = message
        super().__init__(self.message)


def download(url: str, out: Union[str, Path], timeout: float = 60) -> Path:
    """Save the body of a URL to disk unchanged.

    Args:
        url (str): Direct link to a graph6 file, e.g. a House of Graphs export.
        out (Union[str, Path]): File to write.
        timeout (float, optional): Seconds to wait for the server. Defaults to 60.

    Raises:
        FetchError: Connection problems or a non-200 response.

    Returns:
        Path: The written file.
    """
    out = Path(out)
    try:
        response = requests.get(url, stream=True, timeout=timeout, allow_redirects=True)
    except requests.RequestException as e:
        raise FetchError(f"Could not reach {url}: {e}") from e

    if response.status_code != 200:
        raise FetchError(f"{url} answered with status {response.status_code}.")

    with open(out, "wb") as con:
        for data in response.iter_content(chunk_size=8192):
            con.write(data)
    logger.info("Saved {url} to {out}", url=url, out=out)
    return out


def fetch_dataset(
    out: Optional[Union[str, Path]] = None,
    url: Optional[str] = None,
    input: Optional[Union[str, Path]] = None,
    timeout: float = 60,
) -> int:
    """Download or copy a graph6 dataset and check that every line is a cubic graph.

    Args:
        out (Optional[Union[str, Path]], optional): Where to save it. A local input is
            validated in place when left as None. Defaults to None.
        url (Optional[str], optional): Remote dataset. Defaults to None.
        input (Optional[Union[str, Path]], optional): Local dataset. Defaults to None.
        timeout (float, optional): Download timeout in seconds. Defaults to 60.

    Raises:
        FetchError: The download failed.
        DatasetValidationError: A line is not a cubic graph in graph6.

    Returns:
        int: Number of graphs in the dataset.
    """
    if (url is None) == (input is None):
        raise ValueError("Give exactly one of url or input.")

    if url is not None:
        if out is None:
            raise ValueError("A download needs an output file.")
        target = download(url, out, timeout)
    elif out is not None and Path(out).resolve() != Path(input).resolve():
        target = Path(shutil.copyfile(input, out))
    else:
        target = Path(input)

    count = len(read_graphs(target))
    logger.info("{k} graphs validated in {f}", k=count, f=target)
    return count
