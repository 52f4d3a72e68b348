import pyrankone


def test_version():
    version = pyrankone.__version__

    assert version is not None
