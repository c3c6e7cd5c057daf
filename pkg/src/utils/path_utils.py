"""パス解決の共通補助関数を提供する。"""

from __future__ import annotations

from pathlib import Path

from consts.cli_constants import CORPUS_DIRECTORY_NAME
from consts.logging_constants import LOG_DIRECTORY_NAME


def get_project_root() -> Path:
    """プロジェクトルートパスを返す。

    引数:
        なし。

    戻り値:
        このリポジトリのルートディレクトリパス。

    例外:
        なし。
    """
    return Path(__file__).resolve().parent.parent.parent


def get_corpus_directory() -> Path:
    """回帰コーパスの既定ディレクトリを返す。"""
    return get_project_root() / CORPUS_DIRECTORY_NAME


def get_logs_directory() -> Path:
    """ログ出力ディレクトリを作成して返す。

    引数:
        なし。

    戻り値:
        `<project_root>/logs`のパス。

    例外:
        OSError: ディレクトリ作成に失敗した場合。
    """
    logs_directory = get_project_root() / LOG_DIRECTORY_NAME
    logs_directory.mkdir(parents=True, exist_ok=True)
    return logs_directory
